use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::curve::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::exactalg::poly::{gcd_unchecked, RatPolynomial};
use crate::exactalg::rational::Rational;

/// `f = (a(x) + b(x) y) / den(x)` in the function field of the curve.
///
/// The representation is canonical: `den` is monic and `a`, `b`, `den`
/// have no common factor, so equal functions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FunctionWire")]
pub struct CurveFunction {
    a: RatPolynomial,
    b: RatPolynomial,
    #[serde(skip_serializing_if = "RatPolynomial::is_one")]
    den: RatPolynomial,
}

#[derive(Deserialize)]
struct FunctionWire {
    a: RatPolynomial,
    b: RatPolynomial,
    #[serde(default = "RatPolynomial::one")]
    den: RatPolynomial,
}

impl TryFrom<FunctionWire> for CurveFunction {
    type Error = Error;
    fn try_from(w: FunctionWire) -> Result<Self> {
        CurveFunction::with_denominator(w.a, w.b, w.den)
    }
}

impl CurveFunction {
    pub fn new(a: RatPolynomial, b: RatPolynomial) -> Self {
        CurveFunction { a, b, den: RatPolynomial::one() }
    }

    pub fn with_denominator(a: RatPolynomial, b: RatPolynomial, den: RatPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(a, b, den))
    }

    fn normalized(a: RatPolynomial, b: RatPolynomial, den: RatPolynomial) -> Self {
        if a.is_zero() && b.is_zero() {
            return CurveFunction::zero();
        }
        let g = gcd_unchecked(&gcd_unchecked(&a, &b), &den);
        let (a, b, den) = if g.is_one() {
            (a, b, den)
        } else {
            (
                a.div_rem_unchecked(&g).0,
                b.div_rem_unchecked(&g).0,
                den.div_rem_unchecked(&g).0,
            )
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            return CurveFunction { a, b, den };
        }
        let s = lc.recip();
        CurveFunction { a: a.scale(&s), b: b.scale(&s), den: den.scale(&s) }
    }

    pub fn zero() -> Self {
        Self::new(RatPolynomial::zero(), RatPolynomial::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(RatPolynomial::constant(c), RatPolynomial::zero())
    }

    pub fn x() -> Self {
        Self::new(RatPolynomial::x(), RatPolynomial::zero())
    }

    pub fn y() -> Self {
        Self::new(RatPolynomial::zero(), RatPolynomial::one())
    }

    pub fn from_poly(a: RatPolynomial) -> Self {
        Self::new(a, RatPolynomial::zero())
    }

    pub fn a(&self) -> &RatPolynomial {
        &self.a
    }

    pub fn b(&self) -> &RatPolynomial {
        &self.b
    }

    pub fn den(&self) -> &RatPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.b.is_zero() && self.a.is_constant() && self.den.is_one()).then(|| self.a.coeff(0))
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalized(&self.a + &o.a, &self.b + &o.b, self.den.clone());
        }
        Self::normalized(
            &(&self.a * &o.den) + &(&o.a * &self.den),
            &(&self.b * &o.den) + &(&o.b * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn neg(&self) -> Self {
        CurveFunction { a: -&self.a, b: -&self.b, den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CurveFunction { a: self.a.scale(c), b: self.b.scale(c), den: self.den.clone() }
    }

    /// `f - c` for a rational constant `c`.
    pub fn sub_constant(&self, c: &Rational) -> Self {
        self.sub(&Self::constant(c.clone()))
    }

    pub fn mul(&self, o: &Self, curve: &HyperellipticCurve) -> Self {
        let a = &(&self.a * &o.a) + &(&(&self.b * &o.b) * curve.h());
        let b = &(&self.a * &o.b) + &(&self.b * &o.a);
        Self::normalized(a, b, &self.den * &o.den)
    }

    /// Image under `y -> -y`.
    pub fn conjugate(&self) -> Self {
        CurveFunction { a: self.a.clone(), b: -&self.b, den: self.den.clone() }
    }

    /// `a^2 - b^2 h`, the norm of the numerator down to `Q(x)`.
    pub fn numerator_norm(&self, curve: &HyperellipticCurve) -> RatPolynomial {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * curve.h())
    }

    pub fn inv(&self, curve: &HyperellipticCurve) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.numerator_norm(curve);
        Ok(Self::normalized(&self.a * &self.den, -&(&self.b * &self.den), n))
    }

    pub fn div(&self, o: &Self, curve: &HyperellipticCurve) -> Result<Self> {
        Ok(self.mul(&o.inv(curve)?, curve))
    }

    pub fn pow(&self, e: u32, curve: &HyperellipticCurve) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self, curve);
        }
        acc
    }

    /// `p(f)` for a polynomial `p`, by Horner's rule.
    pub fn compose_poly(&self, p: &RatPolynomial, curve: &HyperellipticCurve) -> Self {
        let mut acc = Self::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self, curve).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Value at an affine rational point where `den` does not vanish.
    pub fn eval_at(&self, x: &Rational, y: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some((self.a.eval(x) + self.b.eval(x) * y) / d)
    }
}

impl fmt::Display for CurveFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => self.a.to_string(),
            (true, false) => y_term(&self.b),
            (false, false) => {
                let t = y_term(&self.b);
                match t.strip_prefix('-') {
                    Some(rest) => format!("{} - {}", self.a, rest),
                    None => format!("{} + {}", self.a, t),
                }
            }
        };
        if self.den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.den)
        }
    }
}

fn y_term(b: &RatPolynomial) -> String {
    if b.is_one() {
        return "y".into();
    }
    if b == &-RatPolynomial::one() {
        return "-y".into();
    }
    let nonzero = b.coeffs().iter().filter(|c| !c.is_zero()).count();
    let s = b.to_string();
    if nonzero == 1 {
        format!("{s}*y")
    } else {
        format!("({s})*y")
    }
}
