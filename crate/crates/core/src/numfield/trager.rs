//! Factorization over a number field by the norm-shift method: shift
//! `f(x) -> f(x - s*theta)` until its norm down to `Q` is squarefree, factor
//! the norm over `Q`, and pull each rational factor back with a gcd over the
//! field.

use super::field::{FieldElement, NfPolynomial};
use crate::error::{invalid, Result};
use crate::exactalg::factor::factor_over_rationals;
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::Rational;
use crate::exactalg::resultant::{interpolate_from, is_squarefree};

/// `unit * prod factor^multiplicity` over the field.
#[derive(Clone, Debug)]
pub struct NfFactorization {
    pub unit: FieldElement,
    pub factors: Vec<(NfPolynomial, usize)>,
    /// Shift used for each squarefree block, in block order.
    pub shifts: Vec<i64>,
}

impl NfFactorization {
    pub fn expand(&self) -> NfPolynomial {
        let k = self.unit.field();
        let mut acc = NfPolynomial::new(k, vec![self.unit.clone()]).expect("same field");
        for (f, e) in &self.factors {
            acc = acc.mul(&f.pow(*e as u32));
        }
        acc
    }
}

/// Norm `N(g) = prod_sigma sigma(g)` of a polynomial over the field, a
/// rational polynomial of degree `d * deg g`.
pub fn nf_poly_norm(g: &NfPolynomial) -> RatPolynomial {
    let bound = g.field().degree() * g.deg();
    interpolate_from(bound, |x0| g.eval_rational(x0).norm())
}

/// Yun's squarefree decomposition over the field.
fn squarefree_decomposition_nf(f: &NfPolynomial) -> Vec<(NfPolynomial, usize)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_rem(&a0).expect("nonzero").0;
    let mut c = fp.div_rem(&a0).expect("nonzero").0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_rem(&a).expect("nonzero").0;
        if b.deg() == 0 {
            break;
        }
        c = d.div_rem(&a).expect("nonzero").0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

fn shift_sequence() -> impl Iterator<Item = i64> {
    (0i64..).map(|i| if i % 2 == 1 { i.div_euclid(2) + 1 } else { -(i / 2) })
}

/// Factors a monic squarefree polynomial over its field; returns the monic
/// irreducible factors and the shift that made the norm squarefree.
pub(crate) fn trager_squarefree(g: &NfPolynomial) -> (Vec<NfPolynomial>, i64) {
    if g.deg() <= 1 {
        return (vec![g.monic()], 0);
    }
    let k = g.field();
    let theta = k.generator();
    for s in shift_sequence() {
        let shift_elem = theta.scale(&Rational::from_integer(s.into()));
        let shifted = g.shift(&shift_elem.neg());
        let norm = nf_poly_norm(&shifted);
        if !is_squarefree(&norm) {
            continue;
        }
        let fl = factor_over_rationals(&norm).expect("nonzero norm");
        if fl.factors.len() == 1 {
            return (vec![g.monic()], s);
        }
        let mut out = Vec::with_capacity(fl.factors.len());
        for (ni, _) in &fl.factors {
            let h = shifted.gcd(&NfPolynomial::from_rational_poly(k, ni));
            out.push(h.shift(&shift_elem).monic());
        }
        out.sort_by(|a, b| (a.deg(), a.coeffs().iter().map(|c| c.coeffs()).collect::<Vec<_>>())
            .cmp(&(b.deg(), b.coeffs().iter().map(|c| c.coeffs()).collect::<Vec<_>>())));
        return (out, s);
    }
    unreachable!("some shift yields a squarefree norm")
}

/// Complete factorization over the field into monic irreducibles.
pub fn trager_factor(f: &NfPolynomial) -> Result<NfFactorization> {
    if f.is_zero() {
        return invalid("factorization of the zero polynomial");
    }
    let unit = f.leading_coeff();
    let mut factors = Vec::new();
    let mut shifts = Vec::new();
    for (part, mult) in squarefree_decomposition_nf(f) {
        let (facs, s) = trager_squarefree(&part);
        shifts.push(s);
        factors.extend(facs.into_iter().map(|g| (g, mult)));
    }
    Ok(NfFactorization { unit, factors, shifts })
}
