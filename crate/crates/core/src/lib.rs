//! Certified primitive points of degree `d` on imaginary hyperelliptic
//! curves `y^2 = h(x)` over the rationals.

pub mod contract;
pub mod error;
pub mod exactalg;
pub mod hypcurve;
pub mod numfield;
pub mod prospect;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/contractions.md")]
    mod contractions {}
    #[doc = include_str!("../../../book/src/prospect.md")]
    mod prospect {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
