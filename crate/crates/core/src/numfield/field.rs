//! `Q[x]/(m)` for a monic irreducible `m`, its elements in the power basis,
//! and polynomials with coefficients in the field.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exactalg::linalg::kernel;
use crate::exactalg::poly::{poly_inv_mod, RatPolynomial};
use crate::exactalg::rational::Rational;
use crate::exactalg::resultant::resultant_unchecked;
use crate::exactalg::factor_over_rationals;

#[derive(Debug)]
struct FieldData {
    modulus: RatPolynomial,
}

/// A number field `Q(theta)` presented as `Q[x]/(m)`. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct NumberField(Arc<FieldData>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl Eq for NumberField {}

impl NumberField {
    /// Builds the field, certifying irreducibility of `m` by factoring it.
    pub fn new(m: RatPolynomial) -> Result<Self> {
        if m.deg() < 1 {
            return invalid("field modulus must have positive degree");
        }
        if !m.is_monic() {
            return invalid("field modulus must be monic");
        }
        let fl = factor_over_rationals(&m)?;
        if !fl.is_irreducible() {
            return Err(Error::NotAField(m.to_string()));
        }
        Ok(Self::new_unchecked(m))
    }

    /// Trusts the caller that `m` is monic irreducible.
    pub(crate) fn new_unchecked(m: RatPolynomial) -> Self {
        NumberField(Arc::new(FieldData { modulus: m }))
    }

    pub fn modulus(&self) -> &RatPolynomial {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.deg()
    }

    /// The class `theta` of `x`.
    pub fn generator(&self) -> FieldElement {
        self.from_poly(RatPolynomial::x())
    }

    pub fn from_rational(&self, c: Rational) -> FieldElement {
        self.from_poly(RatPolynomial::constant(c))
    }

    pub fn zero(&self) -> FieldElement {
        self.from_poly(RatPolynomial::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    /// The element `p(theta)`.
    pub fn from_poly(&self, p: RatPolynomial) -> FieldElement {
        let rep = if p.degree().is_some_and(|d| d >= self.degree()) {
            p.rem(self.modulus())
        } else {
            p
        };
        FieldElement { field: self.clone(), rep }
    }

    /// Element with the given power-basis coordinates; requires exactly `d`.
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Result<FieldElement> {
        if coeffs.len() != self.degree() {
            return invalid(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coeffs.len()
            ));
        }
        Ok(self.from_poly(RatPolynomial::new(coeffs)))
    }
}

/// An element of a [`NumberField`], held as its reduced representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    rep: RatPolynomial,
}

/// Field operations accepted by [`nf_arithmetic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
}

/// Dispatches a field operation; `b` is ignored for `Inv`.
pub fn nf_arithmetic(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Inv => a.inv(),
    }
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Representative polynomial of degree `< d`.
    pub fn rep(&self) -> &RatPolynomial {
        &self.rep
    }

    /// Power-basis coordinates, always `d` of them.
    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.field.degree()).map(|i| self.rep.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    /// `Some(c)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.rep.is_constant().then(|| self.rep.coeff(0))
    }

    fn same_field(&self, o: &Self) -> Result<()> {
        if self.field != o.field {
            return invalid("elements of different number fields");
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        Ok(self.add(o))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.same_field(o)?;
        Ok(self.mul(o))
    }

    pub fn add(&self, o: &Self) -> Self {
        FieldElement { field: self.field.clone(), rep: &self.rep + &o.rep }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FieldElement { field: self.field.clone(), rep: &self.rep - &o.rep }
    }

    pub fn neg(&self) -> Self {
        FieldElement { field: self.field.clone(), rep: -&self.rep }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.field.from_poly(&self.rep * &o.rep)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FieldElement { field: self.field.clone(), rep: self.rep.scale(c) }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Inverse via the extended gcd with the modulus.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = poly_inv_mod(&self.rep, self.field.modulus())?;
        Ok(FieldElement { field: self.field.clone(), rep: r })
    }

    /// Norm down to `Q`: `Res(m, rep)` for monic `m`.
    pub fn norm(&self) -> Rational {
        if self.rep.is_zero() {
            return Rational::zero();
        }
        resultant_unchecked(self.field.modulus(), &self.rep)
    }

    /// Minimal polynomial over `Q`, found as the first linear dependency
    /// among `1, a, a^2, ...`.
    pub fn minimal_polynomial(&self) -> RatPolynomial {
        let d = self.field.degree();
        let mut powers: Vec<Vec<Rational>> = vec![self.field.one().coeffs()];
        let mut cur = self.field.one();
        for k in 1..=d {
            cur = cur.mul(self);
            powers.push(cur.coeffs());
            // columns are the powers; look for a kernel vector
            let mat: Vec<Vec<Rational>> = (0..d)
                .map(|row| powers.iter().map(|p| p[row].clone()).collect())
                .collect();
            let ker = kernel(&mat, k + 1);
            if let Some(v) = ker.first() {
                return RatPolynomial::new(v.clone()).monic();
            }
        }
        unreachable!("an element of a degree-d field satisfies a degree-d polynomial")
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, p: &RatPolynomial) -> Self {
        let mut acc = self.field.zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&self.field.from_rational(c.clone()));
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // printed in terms of x standing for theta
        write!(f, "{}", self.rep)
    }
}

/// Polynomial with coefficients in a number field, ascending, no trailing
/// zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfPolynomial {
    field: NumberField,
    coeffs: Vec<RatPolynomial>,
}

impl NfPolynomial {
    pub fn new(field: &NumberField, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return invalid("coefficient from a different field");
        }
        Ok(Self::from_reps(field, coeffs.into_iter().map(|c| c.rep).collect()))
    }

    pub(crate) fn from_reps(field: &NumberField, mut coeffs: Vec<RatPolynomial>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NfPolynomial { field: field.clone(), coeffs }
    }

    /// A rational polynomial viewed over the field.
    pub fn from_rational_poly(field: &NumberField, p: &RatPolynomial) -> Self {
        Self::from_reps(
            field,
            p.coeffs().iter().map(|c| RatPolynomial::constant(c.clone())).collect(),
        )
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.field
            .from_poly(self.coeffs.get(i).cloned().unwrap_or_else(RatPolynomial::zero))
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.coeff(self.deg())
    }

    fn m(&self) -> &RatPolynomial {
        self.field.modulus()
    }

    fn red(&self, p: RatPolynomial) -> RatPolynomial {
        if p.degree().is_some_and(|d| d >= self.field.degree()) {
            p.rem(self.m())
        } else {
            p
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = RatPolynomial::zero();
        let v = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Self::from_reps(&self.field, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = RatPolynomial::zero();
        let v = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Self::from_reps(&self.field, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::from_reps(&self.field, Vec::new());
        }
        // accumulate unreduced, reduce once per coefficient
        let mut v = vec![RatPolynomial::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        let v = v.into_iter().map(|c| self.red(c)).collect();
        Self::from_reps(&self.field, v)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let v = self.coeffs.iter().map(|a| self.red(a * c.rep())).collect();
        Self::from_reps(&self.field, v)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading_coeff().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from_integer((i as i64).into())))
            .collect();
        Self::from_reps(&self.field, v)
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok((Self::from_reps(&self.field, Vec::new()), self.clone()));
        }
        let lc_inv = d.leading_coeff().inv()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![RatPolynomial::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = self.red(&r[i + dd] * lc_inv.rep());
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = self.red(&r[i + j] - &(&c * dc));
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::from_reps(&self.field, q), Self::from_reps(&self.field, r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).expect("nonzero divisor").1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `self(x + c)`, by Horner's rule.
    pub fn shift(&self, c: &FieldElement) -> Self {
        let lin = Self::from_reps(&self.field, vec![c.rep().clone(), RatPolynomial::one()]);
        let mut acc = Self::from_reps(&self.field, Vec::new());
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::from_reps(&self.field, vec![a.clone()]));
        }
        acc
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&self.field.from_poly(a.clone()));
        }
        acc
    }

    /// Evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> FieldElement {
        let mut acc = RatPolynomial::zero();
        for a in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + a;
        }
        self.field.from_poly(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_reps(&self.field, vec![RatPolynomial::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}
