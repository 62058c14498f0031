//! Imaginary hyperelliptic curves `y^2 = h(x)` over the rationals: places,
//! divisors, functions, valuations, Riemann-Roch spaces and Jacobian
//! arithmetic.

pub mod curve;
pub mod function;
pub mod jacobian;
pub mod place;
pub mod rr;
pub mod series;
pub mod valuation;

pub use curve::{curve_new, HyperellipticCurve};
pub use function::CurveFunction;
pub use place::{places_over_x, Divisor, Place, PlaceKind};
pub use valuation::{
    fiber_divisor, function_degree, function_valuation, pole_divisor, principal_divisor, zero_divisor,
};
pub use rr::{function_space, function_with_divisor, riemann_roch_basis, RRSpace};
pub use jacobian::{cantor_add, cantor_compose, cantor_mul, cantor_reduce, is_principal, jacobian_class, MumfordDivisor};
pub use series::{expansion_at_infinity, x_expansion, LaurentSeries};
