//! Exact rational arithmetic and univariate polynomial algebra, including
//! factorization over `F_p` and over the rationals.

pub mod factor;
pub mod hensel;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod rational;
pub mod resultant;

pub use factor::{factor_over_rationals, factor_over_rationals_with, is_irreducible, FactorList, FactorOptions};
pub use hensel::{hensel_lift, ZnPolynomial};
pub use modp::{factor_mod_p, ModpFactorList, ModpPolynomial};
pub use poly::{poly_gcd, poly_inv_mod, poly_xgcd, squarefree_decomposition, squarefree_part, RatPolynomial};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use resultant::{is_squarefree, resultant};
