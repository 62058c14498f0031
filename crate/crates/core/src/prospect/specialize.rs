//! Specializing a function at rational values and certifying the fibers.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fiber::{fiber_presentation, Presentation};
use super::heights::height_ordered;
use super::with_jobs;
use crate::error::{Error, Result};
use crate::exactalg::factor::factor_over_rationals;
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::{serde_rational, Rational};
use crate::exactalg::resultant::is_squarefree;
use crate::hypcurve::{function_degree, CurveFunction, HyperellipticCurve};
use crate::numfield::{is_primitive_field, Policy, PrimitivityCertificate};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SpecializationStatus {
    Reducible { factors: Vec<RatPolynomial> },
    /// The fiber polynomial is not squarefree: `t` is a branch value or the
    /// fiber meets a ramification point of `x`.
    BranchLike,
    Irreducible { certificate: PrimitivityCertificate },
    /// The fiber is not presented by a degree-`d` polynomial at this `t`.
    Degenerate { reason: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Specialization {
    #[serde(with = "serde_rational")]
    pub t: Rational,
    pub fiber_poly: RatPolynomial,
    pub presentation: Presentation,
    #[serde(flatten)]
    pub status: SpecializationStatus,
}

impl Specialization {
    /// The certificate, when the fiber is one point of primitive degree.
    pub fn primitive_certificate(&self) -> Option<&PrimitivityCertificate> {
        match &self.status {
            SpecializationStatus::Irreducible { certificate } if certificate.is_primitive() => Some(certificate),
            _ => None,
        }
    }
}

/// Certifies one fiber. With `paranoid`, every certificate is re-verified
/// and quartic verdicts are recomputed by principal subfields.
pub fn specialize(
    curve: &HyperellipticCurve,
    f: &CurveFunction,
    d: usize,
    t: &Rational,
    paranoid: bool,
) -> Result<Specialization> {
    let mk = |fiber_poly, presentation, status| Specialization { t: t.clone(), fiber_poly, presentation, status };
    let (poly, presentation) = match fiber_presentation(curve, f, t) {
        Ok(p) => p,
        Err(Error::DegeneratePresentation(reason)) => {
            let q = &f.den().scale(t) - f.a();
            let status = if is_squarefree(&q) && q.deg() * 2 == d {
                SpecializationStatus::Degenerate { reason }
            } else {
                SpecializationStatus::BranchLike
            };
            return Ok(mk(q, Presentation::XCoordinate, status));
        }
        Err(e) => return Err(e),
    };
    if poly.deg() != d {
        let reason = format!("fiber polynomial has degree {} instead of {d}", poly.deg());
        return Ok(mk(poly, presentation, SpecializationStatus::Degenerate { reason }));
    }
    if !is_squarefree(&poly) {
        return Ok(mk(poly, presentation, SpecializationStatus::BranchLike));
    }
    let fl = factor_over_rationals(&poly)?;
    if !fl.is_irreducible() {
        let factors = fl.factors.into_iter().map(|(g, _)| g).collect();
        return Ok(mk(poly, presentation, SpecializationStatus::Reducible { factors }));
    }
    if presentation == Presentation::XCoordinate && d > 1 && poly.divides(f.b()) {
        // y is not a function of x on this fiber
        let reason = "b vanishes on the fiber".to_string();
        return Ok(mk(poly, presentation, SpecializationStatus::Degenerate { reason }));
    }
    let certificate = is_primitive_field(&poly, Policy::Auto)?;
    if paranoid {
        if !certificate.verify() {
            return Err(Error::PreconditionFailed(format!("certificate for t = {t} does not verify")));
        }
        if d == 4 {
            let general = is_primitive_field(&poly, Policy::ForceGeneral)?;
            if general.verdict != certificate.verdict || !general.verify() {
                return Err(Error::PreconditionFailed(format!(
                    "resolvent and subfield verdicts disagree at t = {t}"
                )));
            }
        }
    }
    Ok(mk(poly, presentation, SpecializationStatus::Irreducible { certificate }))
}

/// How many `t` values to try, and how.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProspectLimits {
    pub t_count: usize,
    /// Only `t` of height at most this.
    pub max_height: Option<u64>,
    pub paranoid: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for ProspectLimits {
    fn default() -> Self {
        ProspectLimits { t_count: 100, max_height: None, paranoid: false, jobs: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub reducible: usize,
    pub branch_like: usize,
    pub primitive: usize,
    pub imprimitive: usize,
    pub degenerate: usize,
}

/// A certified primitive point of degree `d`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimitivePoint {
    #[serde(with = "serde_rational")]
    pub t: Rational,
    pub minimal_polynomial: RatPolynomial,
    pub certificate: PrimitivityCertificate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProspectReport {
    pub curve: HyperellipticCurve,
    pub f: CurveFunction,
    pub d: usize,
    pub specializations: Vec<Specialization>,
    pub primitive_points: Vec<PrimitivePoint>,
    pub counts: StatusCounts,
}

/// Specializes `f` at the first height-ordered rationals.
pub fn prospect(curve: &HyperellipticCurve, f: &CurveFunction, limits: &ProspectLimits) -> Result<ProspectReport> {
    let ts = height_ordered(limits.t_count, limits.max_height);
    prospect_at(curve, f, &ts, limits)
}

/// Specializes `f` at the given values, in parallel; the report keeps the
/// order of `ts`.
pub fn prospect_at(
    curve: &HyperellipticCurve,
    f: &CurveFunction,
    ts: &[Rational],
    limits: &ProspectLimits,
) -> Result<ProspectReport> {
    let d = function_degree(curve, f)?;
    if d < 2 {
        return Err(Error::PreconditionFailed(format!("{f} has degree {d} < 2")));
    }
    let specializations = with_jobs(limits.jobs, || {
        ts.par_iter()
            .map(|t| specialize(curve, f, d, t, limits.paranoid))
            .collect::<Result<Vec<_>>>()
    })??;
    let mut counts = StatusCounts::default();
    let mut primitive_points = Vec::new();
    for s in &specializations {
        match &s.status {
            SpecializationStatus::Reducible { .. } => counts.reducible += 1,
            SpecializationStatus::BranchLike => counts.branch_like += 1,
            SpecializationStatus::Degenerate { .. } => counts.degenerate += 1,
            SpecializationStatus::Irreducible { certificate } if certificate.is_primitive() => {
                counts.primitive += 1;
                primitive_points.push(PrimitivePoint {
                    t: s.t.clone(),
                    minimal_polynomial: s.fiber_poly.clone(),
                    certificate: certificate.clone(),
                });
            }
            SpecializationStatus::Irreducible { .. } => counts.imprimitive += 1,
        }
    }
    Ok(ProspectReport { curve: curve.clone(), f: f.clone(), d, specializations, primitive_points, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;
    use crate::numfield::{CertMethod, Verdict};

    fn e1() -> HyperellipticCurve {
        HyperellipticCurve::new(RatPolynomial::from_ints(&[1, 0, 0, 1])).unwrap()
    }

    #[test]
    fn y_at_small_t() {
        let c = e1();
        let y = CurveFunction::y();
        let ts = [int(1), int(2), int(3)];
        let r = prospect_at(&c, &y, &ts, &ProspectLimits { paranoid: true, ..Default::default() }).unwrap();
        assert_eq!(r.d, 3);
        assert_eq!(r.specializations[0].status, SpecializationStatus::BranchLike);
        let cert = r.specializations[1].primitive_certificate().unwrap();
        assert_eq!(cert.method, CertMethod::PrimeDegree);
        assert_eq!(r.specializations[1].fiber_poly, RatPolynomial::from_ints(&[-3, 0, 0, 1]));
        assert!(matches!(r.specializations[2].status, SpecializationStatus::Reducible { .. }));
        assert_eq!(r.primitive_points.len(), 1);
    }

    #[test]
    fn x_squared_is_never_primitive() {
        let c = e1();
        let f = CurveFunction::from_poly(RatPolynomial::from_ints(&[0, 0, 1]));
        let r = prospect(&c, &f, &ProspectLimits { t_count: 40, paranoid: true, ..Default::default() }).unwrap();
        assert!(r.primitive_points.is_empty());
        assert!(r.counts.imprimitive > 0);
        for s in &r.specializations {
            if let SpecializationStatus::Irreducible { certificate } = &s.status {
                assert_eq!(certificate.verdict, Verdict::Imprimitive);
                assert_eq!(certificate.witness.as_ref().unwrap().degree, 2);
                assert!(certificate.verify());
            }
        }
    }

    #[test]
    fn x2_plus_y_at_two() {
        let c = e1();
        let f = CurveFunction::new(RatPolynomial::from_ints(&[0, 0, 1]), RatPolynomial::one());
        let s = specialize(&c, &f, 4, &int(2), true).unwrap();
        assert_eq!(s.fiber_poly, RatPolynomial::from_ints(&[3, 0, -4, -1, 1]));
        assert!(s.primitive_certificate().is_some());
    }

    #[test]
    fn reports_are_deterministic() {
        let c = e1();
        let f = CurveFunction::new(RatPolynomial::from_ints(&[0, 0, 1]), RatPolynomial::one());
        let a = prospect(&c, &f, &ProspectLimits { t_count: 30, jobs: Some(1), ..Default::default() }).unwrap();
        let b = prospect(&c, &f, &ProspectLimits { t_count: 30, jobs: Some(4), ..Default::default() }).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
