//! Truncated Laurent expansions at the point at infinity in the uniformizer
//! `s = x^g / y`.

use num_traits::{One, Zero};

use super::curve::HyperellipticCurve;
use super::function::CurveFunction;
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::Rational;

/// `sum_{k >= val} c_k s^k`, known for exponents below `prec`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    val: i64,
    coeffs: Vec<Rational>,
    prec: i64,
}

impl LaurentSeries {
    pub fn new(val: i64, coeffs: Vec<Rational>, prec: i64) -> Self {
        let mut s = LaurentSeries { val, coeffs, prec };
        s.normalize();
        s
    }

    pub fn zero(prec: i64) -> Self {
        LaurentSeries { val: prec, coeffs: Vec::new(), prec }
    }

    pub fn monomial(c: Rational, k: i64, prec: i64) -> Self {
        Self::new(k, vec![c], prec)
    }

    fn normalize(&mut self) {
        let len = (self.prec - self.val).max(0) as usize;
        self.coeffs.resize(len, Rational::zero());
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(len);
        self.coeffs.drain(..lead);
        self.val += lead as i64;
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Order of the first known nonzero term.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn coeff(&self, k: i64) -> Rational {
        assert!(k < self.prec, "coefficient beyond precision");
        if k < self.val {
            return Rational::zero();
        }
        self.coeffs[(k - self.val) as usize].clone()
    }

    pub fn leading_coeff(&self) -> Option<Rational> {
        self.coeffs.first().cloned()
    }

    pub fn truncate(&self, prec: i64) -> Self {
        Self::new(self.val, self.coeffs.clone(), prec.min(self.prec))
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec.min(o.prec);
        let val = self.val.min(o.val).min(prec);
        let len = (prec - val) as usize;
        let mut c = vec![Rational::zero(); len];
        for s in [self, o] {
            for (i, x) in s.coeffs.iter().enumerate() {
                let k = s.val + i as i64;
                if k < prec {
                    c[(k - val) as usize] += x;
                }
            }
        }
        Self::new(val, c, prec)
    }

    pub fn scale(&self, a: &Rational) -> Self {
        Self::new(self.val, self.coeffs.iter().map(|c| c * a).collect(), self.prec)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            let p = (self.prec + o.val.min(o.prec)).min(o.prec + self.val.min(self.prec));
            return Self::zero(p);
        }
        let val = self.val + o.val;
        let prec = (self.prec + o.val).min(o.prec + self.val);
        let len = (prec - val).max(0) as usize;
        let mut c = vec![Rational::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate() {
            if i >= len {
                break;
            }
            for (j, y) in o.coeffs.iter().take(len - i).enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::new(val, c, prec)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::monomial(Rational::one(), 0, self.prec - self.val);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { val: self.val + k, coeffs: self.coeffs.clone(), prec: self.prec + k }
    }

    pub fn inv(&self) -> Option<Self> {
        let v = self.valuation()?;
        let rel = self.prec - v;
        let a0inv = self.coeffs[0].recip();
        let n = rel as usize;
        let mut r = vec![Rational::zero(); n];
        if n > 0 {
            r[0] = a0inv.clone();
        }
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                acc += &self.coeffs[j] * &r[k - j];
            }
            r[k] = -acc * &a0inv;
        }
        Some(Self::new(-v, r, -v + rel))
    }

    /// The `m`-th root with leading coefficient one, when the leading
    /// coefficient is one and `m` divides the valuation.
    pub fn root(&self, m: u32) -> Option<Self> {
        let v = self.valuation()?;
        if !self.coeffs[0].is_one() || v % m as i64 != 0 {
            return None;
        }
        let a = &self.coeffs;
        let n = a.len();
        let inv_m = Rational::new(1.into(), (m as i64).into());
        let mut r = vec![Rational::zero(); n];
        r[0] = Rational::one();
        // from A R' = (1/m) A' R, coefficientwise
        for k in 1..n {
            let mut rhs = Rational::zero();
            for j in 0..k {
                rhs += Rational::from_integer(((k - j) as i64).into()) * &a[k - j] * &r[j];
            }
            rhs *= &inv_m;
            let mut lhs = Rational::zero();
            for j in 1..k {
                lhs += Rational::from_integer((j as i64).into()) * &r[j] * &a[k - j];
            }
            r[k] = (rhs - lhs) / Rational::from_integer((k as i64).into());
        }
        let rv = v / m as i64;
        Some(Self::new(rv, r, rv + n as i64))
    }

    /// Terms with negative exponent, as `(exponent, coefficient)`.
    pub fn polar_part(&self) -> Vec<(i64, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (self.val + i as i64, c.clone()))
            .filter(|(k, c)| *k < 0 && !c.is_zero())
            .collect()
    }
}

/// Expansion of `x`, known for exponents below `prec`.
pub fn x_expansion(curve: &HyperellipticCurve, prec: i64) -> LaurentSeries {
    let h = curve.h();
    let g2 = 2 * curve.genus();
    let lc_inv = h.leading_coeff().recip();
    let s_m2 = LaurentSeries::monomial(Rational::one(), -2, prec);
    // x = (s^-2 - sum_{i <= 2g} h_i x^(i - 2g)) / lc
    let mut x = s_m2.scale(&lc_inv);
    loop {
        let xinv = x.inv().expect("x has a pole");
        let mut rhs = s_m2.clone();
        let mut xp = LaurentSeries::monomial(Rational::one(), 0, prec);
        for i in (0..=g2).rev() {
            // xp = x^(i - 2g)
            let hi = h.coeff(i);
            if !hi.is_zero() {
                rhs = rhs.sub(&xp.scale(&hi));
            }
            if i > 0 {
                xp = xp.mul(&xinv);
            }
        }
        let next = rhs.scale(&lc_inv).truncate(prec);
        if next == x {
            return x;
        }
        x = next;
    }
}

fn poly_at(p: &RatPolynomial, x: &LaurentSeries, prec: i64) -> LaurentSeries {
    let mut acc = LaurentSeries::zero(prec);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&LaurentSeries::monomial(c.clone(), 0, prec));
    }
    acc
}

/// Expansion of `f` at infinity with `rel_prec` significant terms past the
/// nominal pole order of its numerator.
pub fn expansion_at_infinity(curve: &HyperellipticCurve, f: &CurveFunction, rel_prec: i64) -> LaurentSeries {
    let g = curve.genus() as i64;
    let top = (2 * f.a().deg() as i64).max(2 * f.b().deg() as i64 + 2 * g + 1) + 2 * f.den().deg() as i64;
    let prec = rel_prec + 2;
    let x = x_expansion(curve, prec + 2 * top + 4);
    let y = x.pow(g as u32).shift(-1);
    let wide = prec + 2 * top + 4;
    let num = poly_at(f.a(), &x, wide).add(&poly_at(f.b(), &x, wide).mul(&y));
    let den = poly_at(f.den(), &x, wide).inv().expect("nonzero denominator");
    num.mul(&den)
}
