//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{invalid, Error, Result};

/// A polynomial with rational coefficients stored in ascending degree.
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - c`
    pub fn linear_root(c: Rational) -> Self {
        Self::new(vec![-c, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for places where
    /// zero has been excluded or does not matter.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.leading_coeff().recip();
        self.scale(&inv)
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        RatPolynomial { coeffs: v }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division; `Err(DivisionByZero)` for a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.div_rem_unchecked(d))
    }

    pub(crate) fn div_rem_unchecked(&self, d: &Self) -> (Self, Self) {
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = d.leading_coeff().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[i + j] -= t;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Remainder modulo `d`; panics on zero `d`.
    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem_unchecked(d).1
    }

    /// Exact quotient; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_zero()
    }

    /// Largest `k` with `u^k | self`. `None` for the zero polynomial.
    pub fn order_at(&self, u: &Self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem_unchecked(u);
            if !r.is_zero() {
                return Some(k);
            }
            cur = q;
            k += 1;
        }
    }

    /// Splits off the rational content: `self = content * primitive` with
    /// `primitive` an integer polynomial with coprime coefficients and
    /// positive leading coefficient.
    pub fn integer_primitive_part(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Parses a JSON-style list of rational strings in ascending degree.
    pub fn from_rational_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn to_rational_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

/// Monic greatest common divisor. Errors when both inputs are zero.
pub fn poly_gcd(p: &RatPolynomial, q: &RatPolynomial) -> Result<RatPolynomial> {
    if p.is_zero() && q.is_zero() {
        return invalid("gcd of two zero polynomials");
    }
    Ok(gcd_unchecked(p, q))
}

pub(crate) fn gcd_unchecked(p: &RatPolynomial, q: &RatPolynomial) -> RatPolynomial {
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a.monic()
}

/// Extended Euclid: returns `(g, s, t)` with `g = s*p + t*q`, `g` monic.
pub fn poly_xgcd(
    p: &RatPolynomial,
    q: &RatPolynomial,
) -> Result<(RatPolynomial, RatPolynomial, RatPolynomial)> {
    if p.is_zero() && q.is_zero() {
        return invalid("xgcd of two zero polynomials");
    }
    let (mut r0, mut r1) = (p.clone(), q.clone());
    let (mut s0, mut s1) = (RatPolynomial::one(), RatPolynomial::zero());
    let (mut t0, mut t1) = (RatPolynomial::zero(), RatPolynomial::one());
    while !r1.is_zero() {
        let (quo, rem) = r0.div_rem_unchecked(&r1);
        let s2 = &s0 - &(&quo * &s1);
        let t2 = &t0 - &(&quo * &t1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lc = r0.leading_coeff().recip();
    Ok((r0.scale(&lc), s0.scale(&lc), t0.scale(&lc)))
}

/// Inverse of `a` modulo `m`; `DivisionByZero` if they are not coprime.
pub fn poly_inv_mod(a: &RatPolynomial, m: &RatPolynomial) -> Result<RatPolynomial> {
    let (g, s, _) = poly_xgcd(&a.rem(m), m)?;
    if !g.is_one() {
        return Err(Error::DivisionByZero);
    }
    Ok(s.rem(m))
}

/// Monic product of the distinct irreducible factors of `p`.
pub fn squarefree_part(p: &RatPolynomial) -> Result<RatPolynomial> {
    if p.is_zero() {
        return invalid("squarefree part of zero");
    }
    let g = gcd_unchecked(p, &p.derivative());
    Ok(p.monic().div_rem_unchecked(&g).0.monic())
}

/// Yun's squarefree decomposition over the rationals: monic pairwise coprime
/// squarefree `(a_i, i)` with `monic(p) = prod a_i^i`. Trivial parts are
/// dropped.
pub fn squarefree_decomposition(p: &RatPolynomial) -> Result<Vec<(RatPolynomial, usize)>> {
    if p.is_zero() {
        return invalid("squarefree decomposition of zero");
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let fp = f.derivative();
    let a0 = gcd_unchecked(&f, &fp);
    let mut b = f.div_rem_unchecked(&a0).0;
    let mut c = fp.div_rem_unchecked(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = gcd_unchecked(&b, &d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem_unchecked(&a).0;
        if b.deg() == 0 {
            break;
        }
        c = d.div_rem_unchecked(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, o: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        RatPolynomial::new(v)
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, o: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        RatPolynomial::new(v)
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, o: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || o.is_zero() {
            return RatPolynomial::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPolynomial::new(v)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPolynomial {
            type Output = RatPolynomial;
            fn $m(self, o: RatPolynomial) -> RatPolynomial {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPolynomial {
    type Output = RatPolynomial;
    fn neg(self) -> RatPolynomial {
        -&self
    }
}

impl fmt::Display for RatPolynomial {
    /// Renders in the same syntax the expression parser reads back,
    /// e.g. `x^4 - 10*x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let cs = format_rational(&a);
            let cs = if a.denom().is_one() { cs } else { format!("({cs})") };
            match (i, a.is_one()) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{cs}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{cs}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RatPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rational_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        RatPolynomial::from_rational_strings(&items).map_err(serde::de::Error::custom)
    }
}
