//! Resultants, and resultants with one polynomial depending on a parameter
//! (computed by evaluation and Newton interpolation).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::RatPolynomial;
use super::rational::Rational;
use crate::error::{invalid, Result};

/// Resultant with the Sylvester-determinant sign convention, i.e.
/// `lc(p)^deg(q) * prod q(alpha)` over the roots `alpha` of `p`.
pub fn resultant(p: &RatPolynomial, q: &RatPolynomial) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return invalid("resultant with a zero polynomial");
    }
    Ok(resultant_unchecked(p, q))
}

pub(crate) fn resultant_unchecked(p: &RatPolynomial, q: &RatPolynomial) -> Rational {
    let mut a = p.clone();
    let mut b = q.clone();
    let mut acc = Rational::one();
    loop {
        let (m, n) = (a.deg(), b.deg());
        if n == 0 {
            return acc * pow_rat(&b.leading_coeff(), m);
        }
        if m == 0 {
            return acc * pow_rat(&a.leading_coeff(), n);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Rational::zero();
        }
        // res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow_rat(&b.leading_coeff(), m - r.deg());
        a = b;
        b = r;
    }
}

fn pow_rat(r: &Rational, e: usize) -> Rational {
    num_traits::pow(r.clone(), e)
}

/// Discriminant-free squarefree test.
pub fn is_squarefree(p: &RatPolynomial) -> bool {
    if p.deg() == 0 {
        return true;
    }
    super::poly::gcd_unchecked(p, &p.derivative()).deg() == 0
}

/// Interpolation points 0, 1, -1, 2, -2, ...
pub(crate) fn sample_point(i: usize) -> Rational {
    let k = i.div_ceil(2) as i64;
    let v = if i % 2 == 1 { k } else { -k };
    Rational::from_integer(BigInt::from(v))
}

/// Newton interpolation through `(x_i, y_i)`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> RatPolynomial {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - j];
            dd[i] = num / den;
        }
    }
    let mut acc = RatPolynomial::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &RatPolynomial::linear_root(xs[i].clone()))
            + &RatPolynomial::constant(dd[i].clone());
    }
    acc
}

/// Recovers a polynomial of degree at most `degree_bound` in `z` from its
/// values `value(z0)` at `degree_bound + 1` integer points.
pub fn interpolate_from<F>(degree_bound: usize, mut value: F) -> RatPolynomial
where
    F: FnMut(&Rational) -> Rational,
{
    let xs: Vec<Rational> = (0..=degree_bound).map(sample_point).collect();
    let ys: Vec<Rational> = xs.iter().map(&mut value).collect();
    interpolate(&xs, &ys)
}

/// `Res_x(a(x), b(x, z))` as a polynomial in `z`, where `b_at(z0)` returns the
/// specialization `b(x, z0)` and the result has degree at most
/// `degree_bound`.
pub fn parametric_resultant<F>(a: &RatPolynomial, degree_bound: usize, mut b_at: F) -> RatPolynomial
where
    F: FnMut(&Rational) -> RatPolynomial,
{
    interpolate_from(degree_bound, |z| {
        let b = b_at(z);
        if b.is_zero() {
            Rational::zero()
        } else {
            resultant_unchecked(a, &b)
        }
    })
}
