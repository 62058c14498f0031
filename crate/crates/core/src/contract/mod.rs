//! Genus-zero contracting morphisms of a divisor, and the test for a
//! function factoring through one.

pub mod enumerate;
pub mod locus;
pub mod span;
pub mod types;

pub use enumerate::{
    enumerate_at_infinity, enumerate_contr0, image_point, mobius_relation, pullback_point, pushforward,
};
pub use locus::{imprimitive_locus_test, LocusTester, LocusVerdict};
pub use span::{dimension_comparison, factors_through, pullback_basis, span_coordinates};
pub use types::{Contraction, ContractionSet, DimensionComparison, TargetPoint};

#[cfg(test)]
mod tests;
