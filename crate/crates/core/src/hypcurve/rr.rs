use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::curve::HyperellipticCurve;
use super::function::CurveFunction;
use super::place::{lift_sqrt, places_over_x, Divisor, Place, PlaceKind};
use super::valuation::principal_divisor;
use crate::error::{invalid, Error, Result};
use crate::exactalg::linalg::{kernel, rref};
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::Rational;

/// A basis of `L(D) = { f : div(f) + D >= 0 }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RRSpace {
    pub divisor: Divisor,
    pub basis: Vec<CurveFunction>,
    pub dimension: usize,
}

/// Basis of `L(D)` for an arbitrary divisor, ordered by increasing pole
/// order at infinity. Distinct basis elements have distinct pole orders
/// at infinity.
pub fn function_space(curve: &HyperellipticCurve, d: &Divisor) -> Result<Vec<CurveFunction>> {
    let g2 = curve.y_pole_order();
    let mut by_u: BTreeMap<RatPolynomial, Vec<(Place, i64)>> = BTreeMap::new();
    for (p, m) in d.iter() {
        if let Some(u) = p.u() {
            by_u.entry(u.clone()).or_default().push((p.clone(), m));
        }
    }
    // f = F / q with F = a + b y integral at every affine place
    let mut q = RatPolynomial::one();
    let mut blocks: Vec<(RatPolynomial, Vec<(Place, i64)>)> = Vec::new();
    for (u, entries) in by_u {
        let c = entries
            .iter()
            .map(|(p, m)| div_ceil(*m, p.ramification()))
            .max()
            .unwrap_or(0)
            .max(0);
        q = &q * &u.pow(c as u32);
        let mut reqs = Vec::new();
        for p in places_over_x(curve, &u)? {
            let r = p.ramification() * c - d.mult(&p);
            if r > 0 {
                reqs.push((p, r));
            }
        }
        blocks.push((u, reqs));
    }
    let n = d.infinity_mult() + 2 * q.deg() as i64;
    if n < 0 {
        return Ok(Vec::new());
    }
    // columns in decreasing pole order: (is_b, power, pole)
    let mut cols: Vec<(bool, usize, i64)> = (0..=(n / 2) as usize).map(|i| (false, i, 2 * i as i64)).collect();
    if n >= g2 {
        cols.extend((0..=((n - g2) / 2) as usize).map(|j| (true, j, 2 * j as i64 + g2)));
    }
    cols.sort_by(|x, y| y.2.cmp(&x.2));
    let ncols = cols.len();
    let max_pow = cols.iter().map(|c| c.1).max().unwrap_or(0);

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (u, reqs) in &blocks {
        for (p, r) in reqs {
            // (modulus for a, modulus for b, y-lift multiplying b)
            let (ka, kb, ylift) = match &p {
                Place::Affine { kind: PlaceKind::Ramified, .. } => {
                    (div_ceil(*r, 2), div_ceil(*r - 1, 2), None)
                }
                Place::Affine { kind: PlaceKind::Inert, .. } => (*r, *r, None),
                Place::Affine { kind: PlaceKind::Split { v }, .. } => {
                    (*r, *r, Some(lift_sqrt(curve.h(), u, v, *r as u32)))
                }
                Place::Infinity => unreachable!(),
            };
            match ylift {
                Some(y) => {
                    let m = u.pow(ka as u32);
                    let xs = powers_mod(&m, max_pow);
                    let contrib = |is_b: bool, i: usize| {
                        if is_b {
                            (&xs[i] * &y).rem(&m)
                        } else {
                            xs[i].clone()
                        }
                    };
                    push_rows(&mut rows, &cols, m.deg(), contrib);
                }
                None => {
                    for (is_b_block, k) in [(false, ka), (true, kb)] {
                        if k <= 0 {
                            continue;
                        }
                        let m = u.pow(k as u32);
                        let xs = powers_mod(&m, max_pow);
                        let contrib = |is_b: bool, i: usize| {
                            if is_b == is_b_block {
                                xs[i].clone()
                            } else {
                                RatPolynomial::zero()
                            }
                        };
                        push_rows(&mut rows, &cols, m.deg(), contrib);
                    }
                }
            }
        }
    }
    let mut ker = kernel(&rows, ncols);
    rref(&mut ker);
    let mut out: Vec<(i64, CurveFunction)> = ker
        .into_iter()
        .map(|v| {
            let pivot = v.iter().position(|c| !c.is_zero()).expect("nonzero kernel vector");
            let mut a = vec![Rational::zero(); max_pow + 1];
            let mut b = vec![Rational::zero(); max_pow + 1];
            for (c, (is_b, i, _)) in v.into_iter().zip(&cols) {
                if *is_b {
                    b[*i] = c;
                } else {
                    a[*i] = c;
                }
            }
            let f = CurveFunction::with_denominator(RatPolynomial::new(a), RatPolynomial::new(b), q.clone())
                .expect("q is nonzero");
            (cols[pivot].2, f)
        })
        .collect();
    out.sort_by_key(|(pole, _)| *pole);
    Ok(out.into_iter().map(|(_, f)| f).collect())
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

fn powers_mod(m: &RatPolynomial, k: usize) -> Vec<RatPolynomial> {
    let mut out = Vec::with_capacity(k + 1);
    let mut cur = RatPolynomial::one().rem(m);
    for _ in 0..=k {
        out.push(cur.clone());
        cur = cur.shift_up(1).rem(m);
    }
    out
}

fn push_rows<F>(rows: &mut Vec<Vec<Rational>>, cols: &[(bool, usize, i64)], width: usize, contrib: F)
where
    F: Fn(bool, usize) -> RatPolynomial,
{
    let images: Vec<RatPolynomial> = cols.iter().map(|(is_b, i, _)| contrib(*is_b, *i)).collect();
    for k in 0..width {
        rows.push(images.iter().map(|p| p.coeff(k)).collect());
    }
}

/// `L(D)` for an effective divisor.
pub fn riemann_roch_basis(curve: &HyperellipticCurve, d: &Divisor) -> Result<RRSpace> {
    if !d.is_effective() {
        return Err(Error::Unsupported(format!("non-effective divisor {d}")));
    }
    let basis = function_space(curve, d)?;
    Ok(RRSpace { divisor: d.clone(), dimension: basis.len(), basis })
}

/// A function with zero divisor `d0` and pole divisor `dinf`, scaled so
/// its leading numerator coefficient is one.
pub fn function_with_divisor(curve: &HyperellipticCurve, d0: &Divisor, dinf: &Divisor) -> Result<CurveFunction> {
    if !d0.is_effective() || !dinf.is_effective() {
        return invalid("zero and pole divisors must be effective");
    }
    if d0.degree() != dinf.degree() {
        return invalid("zero and pole divisors must have equal degree");
    }
    if !d0.disjoint(dinf) {
        return invalid("zero and pole divisors must have disjoint support");
    }
    let target = dinf - d0;
    let space = function_space(curve, &target)?;
    let f = space.into_iter().next().ok_or(Error::NotPrincipal)?;
    if principal_divisor(curve, &f)? != d0 - dinf {
        return Err(Error::NotPrincipal);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn poly(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_ints(c)
    }

    fn curve(c: &[i64]) -> HyperellipticCurve {
        HyperellipticCurve::new(poly(c)).unwrap()
    }

    fn split(c: i64, v: i64) -> Place {
        Place::Affine { u: poly(&[-c, 1]), kind: PlaceKind::Split { v: RatPolynomial::constant(int(v)) } }
    }

    #[test]
    fn basis_at_infinity() {
        let c = curve(&[1, 0, 0, 1]);
        let l4 = riemann_roch_basis(&c, &Divisor::infinity(4)).unwrap();
        let want = vec![
            CurveFunction::constant(int(1)),
            CurveFunction::x(),
            CurveFunction::y(),
            CurveFunction::from_poly(poly(&[0, 0, 1])),
        ];
        assert_eq!(l4.basis, want);
        assert_eq!(riemann_roch_basis(&c, &Divisor::infinity(1)).unwrap().dimension, 1);
        assert_eq!(riemann_roch_basis(&c, &Divisor::zero()).unwrap().dimension, 1);
        assert!(matches!(
            riemann_roch_basis(&c, &Divisor::infinity(-1)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn dimension_formula_on_fixtures() {
        for (h, g) in [(vec![1, 0, 0, 1], 1i64), (vec![-1, 0, 0, 0, 0, 1], 2), (vec![-2, 0, 0, 0, 0, 0, 0, 1], 3)] {
            let c = curve(&h);
            for n in (2 * g - 1)..=12 {
                let dim = riemann_roch_basis(&c, &Divisor::infinity(n)).unwrap().dimension as i64;
                assert_eq!(dim, n - g + 1, "g = {g}, n = {n}");
            }
        }
    }

    #[test]
    fn affine_divisors() {
        let c = curve(&[1, 0, 0, 1]);
        let p = split(2, 3);
        let q = split(0, 1);
        let d = &(&Divisor::from_place(p.clone(), 1) + &Divisor::from_place(q.clone(), 2)) + &Divisor::infinity(1);
        let space = riemann_roch_basis(&c, &d).unwrap();
        assert_eq!(space.dimension, 4 - 1 + 1);
        for f in &space.basis {
            let div = principal_divisor(&c, f).unwrap();
            assert!((&div + &d).is_effective(), "{f}");
        }
    }

    #[test]
    fn functions_with_given_divisor() {
        let c = curve(&[1, 0, 0, 1]);
        let d0 = &Divisor::from_place(split(2, 3), 1) + &Divisor::from_place(split(2, -3), 1);
        let f = function_with_divisor(&c, &d0, &Divisor::infinity(2)).unwrap();
        assert_eq!(f, CurveFunction::from_poly(poly(&[-2, 1])));
        let ram = Place::Affine { u: poly(&[1, 1]), kind: PlaceKind::Ramified };
        let f = function_with_divisor(&c, &Divisor::from_place(ram, 2), &Divisor::infinity(2)).unwrap();
        assert_eq!(f, CurveFunction::from_poly(poly(&[1, 1])));
        assert_eq!(
            function_with_divisor(&c, &Divisor::from_place(split(2, 3), 1), &Divisor::infinity(1)),
            Err(Error::NotPrincipal)
        );
        // 6 (2,3) - 6 inf is principal
        let f = function_with_divisor(&c, &Divisor::from_place(split(2, 3), 6), &Divisor::infinity(6)).unwrap();
        assert_eq!(principal_divisor(&c, &f).unwrap(), &Divisor::from_place(split(2, 3), 6) - &Divisor::infinity(6));
    }

    #[test]
    fn affine_poles() {
        let c = curve(&[1, 0, 0, 1]);
        let p = split(2, 3);
        let d0 = Divisor::infinity(2);
        let dinf = &Divisor::from_place(p.clone(), 1) + &Divisor::from_place(p.conjugate(), 1);
        let f = function_with_divisor(&c, &d0, &dinf).unwrap();
        assert_eq!(f, CurveFunction::from_poly(poly(&[-2, 1])).inv(&c).unwrap());
    }
}
