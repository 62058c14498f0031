use std::collections::BTreeSet;


use super::curve::HyperellipticCurve;
use super::function::CurveFunction;
use super::place::{lift_sqrt, places_over_x, Divisor, Place, PlaceKind};
use crate::error::{invalid, Error, Result};
use crate::exactalg::factor::factor_over_rationals;
use crate::exactalg::poly::RatPolynomial;

/// `v_P` of a polynomial in `x`; `None` for zero.
pub fn poly_valuation(p: &RatPolynomial, place: &Place) -> Option<i64> {
    let d = p.degree()? as i64;
    Some(match place {
        Place::Infinity => -2 * d,
        Place::Affine { u, .. } => place.ramification() * p.order_at(u)? as i64,
    })
}

/// `v_P(a + b y)` for polynomials `a`, `b`, not both zero.
pub(crate) fn numerator_valuation(
    curve: &HyperellipticCurve,
    a: &RatPolynomial,
    b: &RatPolynomial,
    place: &Place,
) -> Option<i64> {
    let va = poly_valuation(a, place);
    let vb = poly_valuation(b, place);
    let min = |x: Option<i64>, y: Option<i64>| match (x, y) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };
    match place {
        Place::Infinity => min(va, vb.map(|v| v - curve.y_pole_order())),
        Place::Affine { kind: PlaceKind::Ramified, .. } => min(va, vb.map(|v| v + 1)),
        Place::Affine { kind: PlaceKind::Inert, .. } => min(va, vb),
        Place::Affine { u, kind: PlaceKind::Split { v } } => {
            if b.is_zero() || a.is_zero() {
                return min(va, vb);
            }
            // v_P + v_Pbar of a + by equals ord_u of the norm, so precision
            // one past that resolves v_P exactly
            let norm = &(a * a) - &(&(b * b) * curve.h());
            let k = norm.order_at(u).map_or(0, |n| n) + 1;
            let yk = lift_sqrt(curve.h(), u, v, k);
            let r = (a + &(b * &yk)).rem(&u.pow(k));
            Some(r.order_at(u).map_or(k as i64, |o| o as i64))
        }
    }
}

pub fn function_valuation(curve: &HyperellipticCurve, f: &CurveFunction, place: &Place) -> Result<i64> {
    if f.is_zero() {
        return invalid("valuation of the zero function");
    }
    let num = numerator_valuation(curve, f.a(), f.b(), place).expect("nonzero numerator");
    let den = poly_valuation(f.den(), place).expect("nonzero denominator");
    Ok(num - den)
}

/// Irreducible factors of the polynomials whose roots carry the affine
/// zeros and poles of `f`.
fn critical_x_points(curve: &HyperellipticCurve, f: &CurveFunction) -> Result<BTreeSet<RatPolynomial>> {
    let mut out = BTreeSet::new();
    for p in [f.numerator_norm(curve), f.den().clone()] {
        if p.deg() > 0 {
            for (u, _) in factor_over_rationals(&p)?.factors {
                out.insert(u);
            }
        }
    }
    Ok(out)
}

/// `div(f)` as an exact divisor.
pub fn principal_divisor(curve: &HyperellipticCurve, f: &CurveFunction) -> Result<Divisor> {
    if f.is_zero() {
        return invalid("divisor of the zero function");
    }
    let mut d = Divisor::zero();
    d.add_place(Place::Infinity, function_valuation(curve, f, &Place::Infinity)?);
    for u in critical_x_points(curve, f)? {
        for p in places_over_x(curve, &u)? {
            let v = function_valuation(curve, f, &p)?;
            d.add_place(p, v);
        }
    }
    Ok(d)
}

pub fn pole_divisor(curve: &HyperellipticCurve, f: &CurveFunction) -> Result<Divisor> {
    if f.is_polynomial() {
        let v = function_valuation(curve, f, &Place::Infinity)?;
        return Ok(Divisor::infinity((-v).max(0)).positive_part());
    }
    Ok(principal_divisor(curve, f)?.negative_part())
}

pub fn zero_divisor(curve: &HyperellipticCurve, f: &CurveFunction) -> Result<Divisor> {
    Ok(principal_divisor(curve, f)?.positive_part())
}

/// Degree of `f` as a map to the projective line.
pub fn function_degree(curve: &HyperellipticCurve, f: &CurveFunction) -> Result<usize> {
    if f.is_zero() || f.is_constant() {
        return Err(Error::DegreeUndefined);
    }
    Ok(pole_divisor(curve, f)?.degree() as usize)
}

/// The fiber `f^*(t)`; `t = None` is the point at infinity. The flag is
/// true iff every multiplicity is one.
pub fn fiber_divisor(
    curve: &HyperellipticCurve,
    f: &CurveFunction,
    t: Option<&crate::exactalg::rational::Rational>,
) -> Result<(Divisor, bool)> {
    if f.is_constant() || f.is_zero() {
        return Err(Error::DegreeUndefined);
    }
    let d = match t {
        None => pole_divisor(curve, f)?,
        Some(t) => zero_divisor(curve, &f.sub_constant(t))?,
    };
    let flag = d.is_multiplicity_one();
    Ok((d, flag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, Rational};

    fn curve() -> HyperellipticCurve {
        HyperellipticCurve::new(RatPolynomial::from_ints(&[1, 0, 0, 1])).unwrap()
    }

    fn poly(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_ints(c)
    }

    fn split(c: i64, v: i64) -> Place {
        Place::Affine { u: poly(&[-c, 1]), kind: PlaceKind::Split { v: RatPolynomial::constant(int(v)) } }
    }

    #[test]
    fn valuations_on_x3_plus_1() {
        let c = curve();
        let x = CurveFunction::x();
        assert_eq!(function_valuation(&c, &x, &Place::Infinity).unwrap(), -2);
        let xm2 = CurveFunction::from_poly(poly(&[-2, 1]));
        assert_eq!(function_valuation(&c, &xm2, &split(2, 3)).unwrap(), 1);
        let xp1 = CurveFunction::from_poly(poly(&[1, 1]));
        let ram = Place::Affine { u: poly(&[1, 1]), kind: PlaceKind::Ramified };
        assert_eq!(function_valuation(&c, &xp1, &ram).unwrap(), 2);
        assert_eq!(function_valuation(&c, &CurveFunction::y(), &ram).unwrap(), 1);
    }

    #[test]
    fn tangent_line_has_higher_order() {
        // y - 3 vanishes at (2, 3); the tangent there is y = 3 + 2(x - 2),
        // which meets the curve with multiplicity 2 at (2, 3)
        let c = curve();
        let tangent = CurveFunction::new(poly(&[1, -2]), poly(&[1]));
        let d = principal_divisor(&c, &tangent).unwrap();
        assert_eq!(d.mult(&split(2, 3)), 2);
        assert_eq!(d.degree(), 0);
        assert_eq!(d.infinity_mult(), -3);
    }

    #[test]
    fn pole_divisors() {
        let c = curve();
        let cases = [
            (CurveFunction::x(), 2),
            (CurveFunction::y(), 3),
            (CurveFunction::new(poly(&[0, 0, 1]), poly(&[1])), 4),
        ];
        for (f, n) in cases {
            assert_eq!(pole_divisor(&c, &f).unwrap(), Divisor::infinity(n));
            assert_eq!(function_degree(&c, &f).unwrap(), n as usize);
        }
        assert_eq!(
            function_degree(&c, &CurveFunction::constant(int(3))),
            Err(Error::DegreeUndefined)
        );
    }

    #[test]
    fn degree_zero_divisors() {
        for h in [poly(&[1, 0, 0, 1]), poly(&[-1, 0, 0, 0, 0, 1]), poly(&[-2, 0, 0, 0, 0, 0, 0, 1])] {
            let c = HyperellipticCurve::new(h).unwrap();
            for f in [
                CurveFunction::x(),
                CurveFunction::y(),
                CurveFunction::new(poly(&[0, 0, 1]), poly(&[1])),
                CurveFunction::from_poly(poly(&[-2, 1])),
                CurveFunction::new(poly(&[3, 1]), poly(&[1, 2])).inv(&c).unwrap(),
            ] {
                assert_eq!(principal_divisor(&c, &f).unwrap().degree(), 0, "{f}");
            }
        }
    }

    #[test]
    fn fibers() {
        let c = curve();
        let (d, one) = fiber_divisor(&c, &CurveFunction::x(), Some(&int(2))).unwrap();
        assert!(one);
        assert_eq!(d, &Divisor::from_place(split(2, 3), 1) + &Divisor::from_place(split(2, -3), 1));
        let (d, one) = fiber_divisor(&c, &CurveFunction::x(), Some(&int(-1))).unwrap();
        assert!(!one);
        assert_eq!(d.degree(), 2);
        let x2 = CurveFunction::from_poly(poly(&[0, 0, 1]));
        let (d, one) = fiber_divisor(&c, &x2, Some(&int(4))).unwrap();
        assert!(one);
        assert_eq!(d.degree(), 4);
        assert_eq!(d.support().len(), 3);
        let (d, _) = fiber_divisor(&c, &x2, Some(&Rational::new(1.into(), 3.into()))).unwrap();
        assert_eq!(d.degree(), 4);
    }
}
