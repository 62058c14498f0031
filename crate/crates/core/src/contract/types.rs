use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::{format_rational, parse_rational, Rational};
use crate::hypcurve::{CurveFunction, Divisor};

/// A closed point of the projective line: infinity, or the roots of a
/// monic irreducible polynomial in `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TargetPoint {
    Finite(RatPolynomial),
    Infinity,
}

impl TargetPoint {
    pub fn rational(c: Rational) -> Self {
        TargetPoint::Finite(RatPolynomial::linear_root(c))
    }

    pub fn degree(&self) -> usize {
        match self {
            TargetPoint::Infinity => 1,
            TargetPoint::Finite(w) => w.deg(),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            TargetPoint::Finite(w) if w.deg() == 1 => Some(-w.coeff(0)),
            _ => None,
        }
    }
}

impl fmt::Display for TargetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetPoint::Infinity => write!(f, "inf"),
            TargetPoint::Finite(w) if w.deg() == 1 => write!(f, "{}", format_rational(&-w.coeff(0))),
            TargetPoint::Finite(w) => write!(f, "root of {}", w.to_string().replace('x', "z")),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TargetPointWire {
    Named(String),
    Closed { minpoly: RatPolynomial },
}

impl Serialize for TargetPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let w = match self {
            TargetPoint::Infinity => TargetPointWire::Named("inf".into()),
            TargetPoint::Finite(p) if p.deg() == 1 => TargetPointWire::Named(format_rational(&-p.coeff(0))),
            TargetPoint::Finite(p) => TargetPointWire::Closed { minpoly: p.clone() },
        };
        w.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TargetPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match TargetPointWire::deserialize(d)? {
            TargetPointWire::Named(s) if s == "inf" => Ok(TargetPoint::Infinity),
            TargetPointWire::Named(s) => parse_rational(&s).map(TargetPoint::rational).map_err(D::Error::custom),
            TargetPointWire::Closed { minpoly } => {
                if !minpoly.is_monic() || minpoly.deg() == 0 {
                    return Err(D::Error::custom("target minpoly must be monic of positive degree"));
                }
                Ok(TargetPoint::Finite(minpoly))
            }
        }
    }
}

/// A map `g: X -> P^1` of degree `e` with `D = g^*(D')`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Contraction {
    pub g: CurveFunction,
    pub e: usize,
    /// `D'` as `(point, multiplicity)`, sorted.
    pub target_divisor: Vec<(TargetPoint, i64)>,
    /// `g^*(D')` as recomputed from the fibers of `g`.
    pub pullback: Divisor,
    pub pullback_verified: bool,
}

impl Contraction {
    pub fn target_degree(&self) -> i64 {
        self.target_divisor.iter().map(|(p, m)| p.degree() as i64 * m).sum()
    }
}

/// The result of a dimension comparison between `P(D)` and `P(D')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionComparison {
    pub dim_pd: i64,
    pub dim_pd_prime: i64,
    pub holds: bool,
}

/// Contraction classes for a divisor, one representative per class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContractionSet {
    pub divisor: Divisor,
    pub contractions: Vec<Contraction>,
    /// Degrees `e` for which degree-`e` maps totally ramified at infinity
    /// form a positive-dimensional family (only for `D = n * inf`); these
    /// are not listed but are handled by the locus test.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub infinity_families: Vec<usize>,
}
