//! Searching `L(d * inf)` for a function of degree `d` whose function field
//! extension `Q(X) / Q(f)` is primitive.

use serde::{Deserialize, Serialize};

use super::heights::height_ordered;
use super::specialize::specialize;
use crate::contract::{LocusTester, LocusVerdict};
use crate::error::{Error, Result};
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::{serde_rational, Rational};
use crate::hypcurve::{CurveFunction, Divisor, HyperellipticCurve};
use crate::numfield::PrimitivityCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest absolute coefficient tried.
    pub coeff_height: u32,
    /// Candidates (of full degree, outside the contraction locus) to
    /// specialize before giving up.
    pub max_candidates: usize,
    /// Height-ordered `t` values tried per candidate.
    pub t_count: usize,
    pub paranoid: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { coeff_height: 2, max_candidates: 200, t_count: 60, paranoid: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoundFunction {
    pub f: CurveFunction,
    pub divisor: Divisor,
    #[serde(with = "crate::exactalg::rational::serde_rational_vec")]
    pub coordinates: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub t: Rational,
    pub fiber_poly: RatPolynomial,
    /// `GenericFromSpecialization`, backed by the fiber over `t`.
    pub certificate: PrimitivityCertificate,
    pub skipped_degree_deficient: usize,
    pub skipped_imprimitive: usize,
    pub specialized: usize,
}

fn rank(c: i64) -> i64 {
    match c {
        0 => 0,
        c if c > 0 => 2 * c - 1,
        c => -2 * c,
    }
}

/// Integer vectors with a positive top coordinate, by height, then number
/// of nonzero entries, then entry ranks `0, 1, -1, 2, -2, ...` read from the
/// top coordinate down.
fn candidates(dim: usize, h: i64) -> Vec<Vec<i64>> {
    let side = (2 * h + 1) as usize;
    let mut out = Vec::new();
    let lower = side.pow(dim as u32 - 1);
    for top in 1..=h {
        for mut i in 0..lower {
            let mut v = Vec::with_capacity(dim);
            for _ in 0..dim - 1 {
                v.push((i % side) as i64 - h);
                i /= side;
            }
            v.push(top);
            out.push(v);
        }
    }
    out.sort_by_cached_key(|v| {
        let height = v.iter().map(|c| c.abs()).max().unwrap_or(0);
        let nonzero = v.iter().filter(|c| **c != 0).count();
        let ranks: Vec<i64> = v.iter().rev().map(|c| rank(*c)).collect();
        (height, nonzero, ranks)
    });
    out
}

/// The first candidate in `L(d * inf)` that has degree `d`, does not factor
/// through a contraction of `d * inf`, and has an irreducible primitive
/// fiber over a height-ordered `t`.
pub fn find_primitive_function(curve: &HyperellipticCurve, d: usize, budget: &SearchBudget) -> Result<FoundFunction> {
    let twice_genus = 2 * curve.genus();
    if d <= twice_genus {
        return Err(Error::OutOfTheoremRange { degree: d, twice_genus });
    }
    let divisor = Divisor::infinity(d as i64);
    let tester = LocusTester::for_divisor(curve, &divisor)?;
    let dim = tester.basis().len();
    let ts = height_ordered(budget.t_count, None);
    let (mut deficient, mut imprimitive, mut specialized) = (0, 0, 0);
    for v in candidates(dim, budget.coeff_height.max(1) as i64) {
        let coords: Vec<Rational> = v.iter().map(|c| Rational::from_integer((*c).into())).collect();
        match tester.classify_coordinates(&coords)? {
            LocusVerdict::DegreeDeficient => {
                deficient += 1;
                continue;
            }
            LocusVerdict::Imprimitive { .. } => {
                imprimitive += 1;
                continue;
            }
            LocusVerdict::NoFactorization => {}
        }
        if specialized == budget.max_candidates {
            break;
        }
        specialized += 1;
        let f = tester.combine(&coords);
        for t in &ts {
            let s = specialize(curve, &f, d, t, budget.paranoid)?;
            if let Some(fiber) = s.primitive_certificate() {
                let certificate = PrimitivityCertificate::from_specialization(t.clone(), fiber.clone());
                return Ok(FoundFunction {
                    f,
                    divisor,
                    coordinates: coords,
                    t: t.clone(),
                    fiber_poly: s.fiber_poly,
                    certificate,
                    skipped_degree_deficient: deficient,
                    skipped_imprimitive: imprimitive,
                    specialized,
                });
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no certified primitive function of degree {d} among {specialized} candidates of height <= {}",
        budget.coeff_height
    )))
}
