//! Linear algebra over spaces of curve functions, and membership of a
//! function in the pullback of a linear system on the line.

use num_traits::{One, Zero};

use super::types::{Contraction, DimensionComparison, TargetPoint};
use crate::error::{Error, Result};
use crate::exactalg::linalg::{kernel, solve};
use crate::exactalg::poly::{gcd_unchecked, RatPolynomial};
use crate::exactalg::rational::Rational;
use super::enumerate::pushforward;
use crate::hypcurve::{pole_divisor, riemann_roch_basis, CurveFunction, Divisor, HyperellipticCurve};

/// Numerator coefficient vectors of the functions over a common
/// denominator, one vector per function and all of the same length.
pub(crate) fn numerator_vectors(fs: &[&CurveFunction]) -> Vec<Vec<Rational>> {
    let mut l = RatPolynomial::one();
    for f in fs {
        let g = gcd_unchecked(&l, f.den());
        l = (&l * f.den()).div_rem_unchecked(&g).0;
    }
    let parts: Vec<(RatPolynomial, RatPolynomial)> = fs
        .iter()
        .map(|f| {
            let m = l.div_rem_unchecked(f.den()).0;
            (f.a() * &m, f.b() * &m)
        })
        .collect();
    let la = parts.iter().map(|p| p.0.coeffs().len()).max().unwrap_or(0);
    let lb = parts.iter().map(|p| p.1.coeffs().len()).max().unwrap_or(0);
    parts
        .into_iter()
        .map(|(a, b)| {
            let mut v: Vec<Rational> = (0..la).map(|i| a.coeff(i)).collect();
            v.extend((0..lb).map(|i| b.coeff(i)));
            v
        })
        .collect()
}

/// Coordinates of `f` in the span of `basis`, if it lies there.
pub fn span_coordinates(basis: &[CurveFunction], f: &CurveFunction) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return f.is_zero().then(Vec::new);
    }
    let mut all: Vec<&CurveFunction> = basis.iter().collect();
    all.push(f);
    let vecs = numerator_vectors(&all);
    let (target, cols) = vecs.split_last().expect("nonempty");
    let rows = target.len();
    let m: Vec<Vec<Rational>> = (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    if rows == 0 {
        return Some(vec![Rational::zero(); basis.len()]);
    }
    solve(&m, target)
}

/// Rational linear relations among the functions.
pub(crate) fn linear_relations(fs: &[&CurveFunction]) -> Vec<Vec<Rational>> {
    let vecs = numerator_vectors(fs);
    let rows = vecs.first().map_or(0, |v| v.len());
    let m: Vec<Vec<Rational>> = (0..rows).map(|r| vecs.iter().map(|c| c[r].clone()).collect()).collect();
    kernel(&m, fs.len())
}

/// `g^*` of a basis of `H^0(P^1, O(D'))`: the constant, powers of `g` for
/// the part at infinity, and `g^j / w(g)^r` for a finite point `w`.
pub fn pullback_basis(curve: &HyperellipticCurve, c: &Contraction) -> Result<Vec<CurveFunction>> {
    let mut out = vec![CurveFunction::constant(Rational::one())];
    for (p, m) in &c.target_divisor {
        match p {
            TargetPoint::Infinity => {
                let mut gk = CurveFunction::constant(Rational::one());
                for _ in 0..*m {
                    gk = gk.mul(&c.g, curve);
                    out.push(gk.clone());
                }
            }
            TargetPoint::Finite(w) => {
                let wg_inv = c.g.compose_poly(w, curve).inv(curve)?;
                let mut denom = CurveFunction::constant(Rational::one());
                for _ in 0..*m {
                    denom = denom.mul(&wg_inv, curve);
                    let mut gj = denom.clone();
                    for _ in 0..w.deg() {
                        out.push(gj.clone());
                        gj = gj.mul(&c.g, curve);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Whether `f = phi(g)` for a rational function `phi` on the line.
///
/// `phi` is first sought among functions with poles bounded by the target
/// divisor of `c`; failing that, the pole divisor of `f` is pushed forward
/// along `g` and `f` is tested against the pullback of that linear system.
pub fn factors_through(curve: &HyperellipticCurve, f: &CurveFunction, c: &Contraction) -> Result<bool> {
    if f.is_constant() {
        return Err(Error::DegreeUndefined);
    }
    if span_coordinates(&pullback_basis(curve, c)?, f).is_some() {
        return Ok(true);
    }
    let poles = pole_divisor(curve, f)?;
    let Some(target_divisor) = pushforward(curve, &c.g, &poles)? else {
        return Ok(false);
    };
    let probe = Contraction { target_divisor, ..c.clone() };
    Ok(span_coordinates(&pullback_basis(curve, &probe)?, f).is_some())
}

/// Compares `dim P(D) = dim L(D) - 1` with `dim P(D') = deg D'`.
pub fn dimension_comparison(
    curve: &HyperellipticCurve,
    d: &Divisor,
    c: &Contraction,
) -> Result<DimensionComparison> {
    if d.degree() <= 2 * curve.genus() as i64 {
        return Err(Error::PreconditionFailed(format!(
            "deg D = {} must exceed 2g = {}",
            d.degree(),
            2 * curve.genus()
        )));
    }
    let dim_pd = riemann_roch_basis(curve, d)?.dimension as i64 - 1;
    let dim_pd_prime = c.target_degree();
    Ok(DimensionComparison { dim_pd, dim_pd_prime, holds: dim_pd > dim_pd_prime })
}
