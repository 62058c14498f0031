//! Polynomials presenting the residue fields of the fiber `f^{-1}(t)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::Rational;
use crate::exactalg::resultant::{is_squarefree, parametric_resultant};
use crate::hypcurve::{CurveFunction, HyperellipticCurve};

/// Which coordinate the fiber polynomial is the minimal polynomial of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Presentation {
    /// Roots are the `x`-coordinates of the fiber.
    XCoordinate,
    /// Roots are the values of `x + lambda * y` on the fiber.
    PrimitiveElement { lambda: u32 },
}

/// `(t * den - a)^2 - b^2 h`, made monic, when `b != 0`.
fn x_fiber(curve: &HyperellipticCurve, f: &CurveFunction, t: &Rational) -> RatPolynomial {
    let l = &f.den().scale(t) - f.a();
    (&(&l * &l) - &(&(f.b() * f.b()) * curve.h())).monic()
}

/// `Res_x(t * den - a, (z - x)^2 - lambda^2 h)`, made monic, for `b = 0`.
fn eliminated_fiber(curve: &HyperellipticCurve, q: &RatPolynomial, lambda: u32) -> RatPolynomial {
    let l2 = Rational::from_integer((lambda as i64 * lambda as i64).into());
    let lh = curve.h().scale(&l2);
    let p = parametric_resultant(q, 2 * q.deg(), |z| {
        // x^2 - 2 z x + z^2 - lambda^2 h
        let quad = RatPolynomial::new(vec![z * z, -(z + z), Rational::from_integer(1.into())]);
        &quad - &lh
    });
    if p.is_zero() {
        p
    } else {
        p.monic()
    }
}

/// Degree of `f = a(x) / den(x)` when `b = 0`.
fn x_only_degree(f: &CurveFunction) -> usize {
    2 * f.a().deg().max(f.den().deg())
}

/// The fiber polynomial together with the coordinate it presents.
pub fn fiber_presentation(
    curve: &HyperellipticCurve,
    f: &CurveFunction,
    t: &Rational,
) -> Result<(RatPolynomial, Presentation)> {
    if f.is_constant() {
        return Err(Error::DegreeUndefined);
    }
    if !f.b().is_zero() {
        return Ok((x_fiber(curve, f, t), Presentation::XCoordinate));
    }
    let d = x_only_degree(f);
    let q = &f.den().scale(t) - f.a();
    for lambda in 1..=2 * d as u32 {
        let p = eliminated_fiber(curve, &q, lambda);
        if p.deg() == d && is_squarefree(&p) {
            return Ok((p, Presentation::PrimitiveElement { lambda }));
        }
    }
    Err(Error::DegeneratePresentation(format!(
        "no lambda in 1..={} gives a squarefree degree-{d} polynomial for {f} at t = {t}",
        2 * d
    )))
}

/// The fiber polynomial of `f` over `t`: see [`fiber_presentation`].
pub fn fiber_polynomial(curve: &HyperellipticCurve, f: &CurveFunction, t: &Rational) -> Result<RatPolynomial> {
    Ok(fiber_presentation(curve, f, t)?.0)
}
