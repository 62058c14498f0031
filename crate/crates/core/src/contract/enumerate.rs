//! Enumeration of maps to the line that contract a divisor.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::span::linear_relations;
use super::types::{Contraction, ContractionSet, TargetPoint};
use crate::error::{Error, Result};
use crate::exactalg::factor::factor_over_rationals;
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::Rational;
use crate::hypcurve::place::lift_sqrt;
use crate::hypcurve::{
    expansion_at_infinity, function_space, function_valuation, function_with_divisor, is_principal,
    pole_divisor, zero_divisor, CurveFunction, Divisor, HyperellipticCurve, Place, PlaceKind,
};
use crate::numfield::NumberField;

/// Largest support size accepted by the pair enumeration.
pub const MAX_SUPPORT: usize = 14;

/// The closed point `g(P)` of the line.
pub fn image_point(curve: &HyperellipticCurve, g: &CurveFunction, p: &Place) -> Result<TargetPoint> {
    if function_valuation(curve, g, p)? < 0 {
        return Ok(TargetPoint::Infinity);
    }
    let value_minpoly = match p {
        Place::Infinity => {
            let s = expansion_at_infinity(curve, g, 2);
            RatPolynomial::linear_root(s.coeff(0))
        }
        Place::Affine { u, kind: PlaceKind::Split { v } } => {
            // leading u-adic terms of numerator and denominator
            let t = g.den().order_at(u).expect("nonzero");
            let k = t + 1;
            let uk = u.pow(k);
            let yk = lift_sqrt(curve.h(), u, v, k);
            let num = (g.a() + &(g.b() * &yk)).rem(&uk);
            let ut = u.pow(t);
            let num = num.div_rem_unchecked(&ut).0;
            let den = g.den().div_rem_unchecked(&ut).0;
            residue_minpoly(u, &num, &den)
        }
        Place::Affine { u, kind: PlaceKind::Ramified } => residue_minpoly(u, g.a(), g.den()),
        Place::Affine { u, kind: PlaceKind::Inert } => {
            // normalization makes den a unit at an inert place where g is regular
            let bound = 2 * u.deg();
            let res = crate::exactalg::resultant::parametric_resultant(u, bound, |z| {
                let l = &g.den().scale(z) - g.a();
                &(&l * &l) - &(&(g.b() * g.b()) * curve.h())
            });
            let mut hit = None;
            for (w, _) in factor_over_rationals(&res)?.factors {
                let wg = g.compose_poly(&w, curve);
                if function_valuation(curve, &wg, p)? > 0 {
                    hit = Some(w);
                    break;
                }
            }
            hit.ok_or_else(|| Error::PreconditionFailed(format!("no image found for {p}")))?
        }
    };
    Ok(TargetPoint::Finite(value_minpoly))
}

fn residue_minpoly(u: &RatPolynomial, num: &RatPolynomial, den: &RatPolynomial) -> RatPolynomial {
    if u.deg() == 1 {
        let x0 = -u.coeff(0);
        return RatPolynomial::linear_root(num.eval(&x0) / den.eval(&x0));
    }
    let k = NumberField::new_unchecked(u.clone());
    let val = k.from_poly(num.clone()).mul(&k.from_poly(den.clone()).inv().expect("unit"));
    val.minimal_polynomial()
}

/// `g^*` of a closed point of the line.
pub fn pullback_point(curve: &HyperellipticCurve, g: &CurveFunction, w: &TargetPoint) -> Result<Divisor> {
    match w {
        TargetPoint::Infinity => pole_divisor(curve, g),
        TargetPoint::Finite(w) => zero_divisor(curve, &g.compose_poly(w, curve)),
    }
}

/// The divisor `E'` on the line with `g^*(E') = e`, if one exists.
pub fn pushforward(
    curve: &HyperellipticCurve,
    g: &CurveFunction,
    e: &Divisor,
) -> Result<Option<Vec<(TargetPoint, i64)>>> {
    let mut target: BTreeMap<TargetPoint, i64> = BTreeMap::new();
    for (p, m) in e.iter() {
        let w = image_point(curve, g, p)?;
        if target.contains_key(&w) {
            continue;
        }
        let fiber = pullback_point(curve, g, &w)?;
        let r = fiber.mult(p);
        if r == 0 || m % r != 0 {
            return Ok(None);
        }
        target.insert(w, m / r);
    }
    let mut back = Divisor::zero();
    for (w, m) in &target {
        back = &back + &pullback_point(curve, g, w)?.scale(*m);
    }
    if &back != e {
        return Ok(None);
    }
    Ok(Some(target.into_iter().collect()))
}

/// `(alpha, beta, gamma, delta)` with `h = (alpha g + beta) / (gamma g + delta)`
/// and `alpha delta - beta gamma != 0`, if such a relation exists.
pub fn mobius_relation(
    curve: &HyperellipticCurve,
    g: &CurveFunction,
    h: &CurveFunction,
) -> Option<[Rational; 4]> {
    let gh = g.mul(h, curve);
    let one = CurveFunction::constant(Rational::one());
    // k0 g h + k1 h + k2 g + k3 = 0
    for k in linear_relations(&[&gh, h, g, &one]) {
        let (alpha, beta, gamma, delta) = (-k[2].clone(), -k[3].clone(), k[0].clone(), k[1].clone());
        if !(&alpha * &delta - &beta * &gamma).is_zero() {
            return Some([alpha, beta, gamma, delta]);
        }
    }
    None
}

fn subdivisor(places: &[(Place, i64)], mask: u32) -> Divisor {
    let mut d = Divisor::zero();
    for (i, (p, _)) in places.iter().enumerate() {
        if mask & (1 << i) != 0 {
            d.add_place(p.clone(), 1);
        }
    }
    d
}

/// Ordered pairs `(D0, Dinf)` of disjoint nonempty subdivisors of equal
/// degree `e` with `1 < e < d` and `e | d`, in lexicographic mask order,
/// keeping only one of `(A, B)` and `(B, A)`.
pub(crate) fn candidate_pairs(places: &[(Place, i64)], total: i64, divisibility: bool) -> Vec<(u32, u32, i64)> {
    let k = places.len();
    let deg = |mask: u32| -> i64 {
        (0..k).filter(|i| mask & (1 << i) != 0).map(|i| places[i].1).sum()
    };
    let mut out = Vec::new();
    for a in 1u32..(1 << k) {
        let e = deg(a);
        if e <= 1 || e >= total || (divisibility && total % e != 0) {
            continue;
        }
        for b in (a + 1)..(1 << k) {
            if a & b == 0 && deg(b) == e {
                out.push((a, b, e));
            }
        }
    }
    out
}

/// Builds and verifies the contraction defined by `g` for `d`.
pub(crate) fn contraction_from(
    curve: &HyperellipticCurve,
    d: &Divisor,
    g: CurveFunction,
    e: usize,
) -> Result<Option<Contraction>> {
    let Some(target_divisor) = pushforward(curve, &g, d)? else {
        return Ok(None);
    };
    let mut pullback = Divisor::zero();
    for (w, m) in &target_divisor {
        pullback = &pullback + &pullback_point(curve, &g, w)?.scale(*m);
    }
    let pullback_verified = &pullback == d;
    let c = Contraction { g, e, target_divisor, pullback, pullback_verified };
    if !c.pullback_verified || c.e as i64 * c.target_degree() != d.degree() {
        return Ok(None);
    }
    Ok(Some(c))
}

fn dedupe(curve: &HyperellipticCurve, found: Vec<Contraction>) -> Vec<Contraction> {
    let mut out: Vec<Contraction> = Vec::new();
    for c in found {
        if !out.iter().any(|o| o.e == c.e && mobius_relation(curve, &o.g, &c.g).is_some()) {
            out.push(c);
        }
    }
    out
}

/// Genus-zero contractions of an effective divisor, one per Mobius class.
///
/// Multiplicity-one divisors are handled by zero/pole pairs; `n * inf` by
/// maps totally ramified at infinity. Other shapes are rejected.
pub fn enumerate_contr0(curve: &HyperellipticCurve, d: &Divisor) -> Result<ContractionSet> {
    d.validate(curve)?;
    if !d.is_effective() || d.is_zero() {
        return Err(Error::PreconditionFailed(format!("{d} must be effective and nonzero")));
    }
    if d.is_multiplicity_one() {
        return enumerate_pairs(curve, d);
    }
    let n = d.infinity_mult();
    if d.support() == vec![Place::Infinity] {
        return enumerate_at_infinity(curve, n as usize);
    }
    Err(Error::PreconditionFailed(format!(
        "{d} is neither multiplicity-one nor supported at infinity"
    )))
}

fn enumerate_pairs(curve: &HyperellipticCurve, d: &Divisor) -> Result<ContractionSet> {
    let places: Vec<(Place, i64)> = d.iter().map(|(p, _)| (p.clone(), p.degree() as i64)).collect();
    if places.len() > MAX_SUPPORT {
        return Err(Error::PreconditionFailed(format!(
            "support of size {} exceeds {MAX_SUPPORT}",
            places.len()
        )));
    }
    let total = d.degree();
    let pairs = candidate_pairs(&places, total, true);
    let found: Vec<Option<Contraction>> = pairs
        .par_iter()
        .map(|&(a, b, e)| -> Result<Option<Contraction>> {
            let d0 = subdivisor(&places, a);
            let dinf = subdivisor(&places, b);
            if !is_principal(curve, &(&d0 - &dinf))? {
                return Ok(None);
            }
            let g = function_with_divisor(curve, &d0, &dinf)?;
            contraction_from(curve, d, g, e as usize)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ContractionSet {
        divisor: d.clone(),
        contractions: dedupe(curve, found.into_iter().flatten().collect()),
        infinity_families: Vec::new(),
    })
}

/// Degree-`e` maps with pole divisor `e * inf` for each proper divisor `e`
/// of `n`. When `L(e inf)` has dimension two the map is unique up to affine
/// change and is listed; larger spaces are reported as families.
pub fn enumerate_at_infinity(curve: &HyperellipticCurve, n: usize) -> Result<ContractionSet> {
    let d = Divisor::infinity(n as i64);
    let mut contractions = Vec::new();
    let mut families = Vec::new();
    for e in 2..n {
        if n % e != 0 {
            continue;
        }
        let le = function_space(curve, &Divisor::infinity(e as i64))?;
        let lower = function_space(curve, &Divisor::infinity(e as i64 - 1))?;
        if le.len() == lower.len() {
            continue;
        }
        if le.len() == 2 {
            let g = le.last().expect("two elements").clone();
            if let Some(c) = contraction_from(curve, &d, g, e)? {
                contractions.push(c);
            }
        } else {
            families.push(e);
        }
    }
    Ok(ContractionSet { divisor: d, contractions, infinity_families: families })
}
