//! Principal subfields of `L = Q[x]/(m)`.
//!
//! For each irreducible factor `g` of `m` over `L`, the set of `a in L` whose
//! representative polynomial `a(x)` is congruent to the constant `a(theta)`
//! modulo `g` is a subfield; it is the kernel of a `Q`-linear map. Every
//! subfield of `L` is an intersection of these.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{FieldElement, NfPolynomial, NumberField};
use super::trager::trager_squarefree;
use crate::exactalg::linalg::{kernel, rref};
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::{square_free_kernel, Rational};

/// One principal subfield with a checkable generator.
#[derive(Clone, Debug)]
pub struct PrincipalSubfield {
    pub degree: usize,
    /// `Q`-basis of the subfield inside `L`, in reduced echelon form with
    /// `1` as its first element.
    pub basis: Vec<FieldElement>,
    pub generator: FieldElement,
    pub generator_minpoly: RatPolynomial,
    /// Degree over `L` of the factor of `m` this subfield came from.
    pub factor_degree: usize,
}

/// `m / (x - theta)` over `L`, by synthetic division.
pub(crate) fn deflate_by_generator(k: &NumberField) -> NfPolynomial {
    let m = NfPolynomial::from_rational_poly(k, k.modulus());
    let lin = NfPolynomial::new(k, vec![k.generator().neg(), k.one()]).expect("same field");
    m.div_rem(&lin).expect("nonzero").0
}

/// Irreducible factors of `m` over its own field, `x - theta` first, with
/// the norm shift used to split the rest.
pub fn modulus_factors_over_field(k: &NumberField) -> (Vec<NfPolynomial>, i64) {
    let lin = NfPolynomial::new(k, vec![k.generator().neg(), k.one()]).expect("same field");
    let mut out = vec![lin];
    let mut shift = 0;
    if k.degree() > 1 {
        let rest = deflate_by_generator(k);
        let (facs, s) = trager_squarefree(&rest);
        out.extend(facs);
        shift = s;
    }
    (out, shift)
}

pub fn principal_subfields(k: &NumberField) -> Vec<PrincipalSubfield> {
    principal_subfields_seeded(k, 0).0
}

/// As [`principal_subfields`], with an explicit seed for generator search.
/// Also returns the norm shift used while factoring `m` over `L`.
pub fn principal_subfields_seeded(k: &NumberField, seed: u64) -> (Vec<PrincipalSubfield>, i64) {
    let d = k.degree();
    let (factors, shift) = modulus_factors_over_field(k);
    let subs = factors
        .iter()
        .map(|g| {
            let basis = subfield_basis(k, g);
            let (generator, generator_minpoly) = choose_generator(k, &basis, seed);
            PrincipalSubfield {
                degree: basis.len(),
                basis,
                generator,
                generator_minpoly,
                factor_degree: g.deg(),
            }
        })
        .inspect(|s| debug_assert!(d % s.degree == 0))
        .collect();
    (subs, shift)
}

fn subfield_basis(k: &NumberField, g: &NfPolynomial) -> Vec<FieldElement> {
    let d = k.degree();
    let kg = g.deg();
    let theta = k.generator();
    // column j: coordinates of (x^j mod g) - theta^j
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(d);
    let x = NfPolynomial::new(k, vec![k.zero(), k.one()]).expect("same field");
    let mut xp = NfPolynomial::new(k, vec![k.one()]).expect("same field");
    let mut tp = k.one();
    for _ in 0..d {
        let r = xp.rem(g);
        let diff = r.sub(&NfPolynomial::new(k, vec![tp.clone()]).expect("same field"));
        let mut col = Vec::with_capacity(kg * d);
        for i in 0..kg {
            col.extend(diff.coeff(i).coeffs());
        }
        columns.push(col);
        xp = xp.mul(&x).rem(g);
        tp = tp.mul(&theta);
    }
    let rows = kg * d;
    let mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let ker = kernel(&mat, d);
    // echelon form with pivots at the highest theta powers, so that 1
    // appears as a basis vector on its own
    let mut rev: Vec<Vec<Rational>> = ker
        .into_iter()
        .map(|v| v.into_iter().rev().collect())
        .collect();
    rref(&mut rev);
    let mut basis: Vec<FieldElement> = rev
        .into_iter()
        .map(|v| {
            k.from_coeffs(v.into_iter().rev().collect())
                .expect("d coordinates")
        })
        .collect();
    basis.sort_by_key(|e| e.rep().deg());
    basis
}

fn choose_generator(
    k: &NumberField,
    basis: &[FieldElement],
    seed: u64,
) -> (FieldElement, RatPolynomial) {
    let dim = basis.len();
    if dim == 1 {
        let one = k.one();
        return (one, RatPolynomial::from_ints(&[-1, 1]));
    }
    let nonconst: Vec<&FieldElement> = basis.iter().filter(|b| b.as_rational().is_none()).collect();
    let mut candidates: Vec<FieldElement> = nonconst.iter().map(|b| (*b).clone()).collect();
    let sum = nonconst.iter().fold(k.zero(), |acc, b| acc.add(b));
    candidates.push(sum);
    for c in candidates {
        let mp = c.minimal_polynomial();
        if mp.deg() == dim {
            return canonicalize(c, mp);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut c = k.zero();
        for b in &nonconst {
            let w: i64 = rng.gen_range(-3..=3);
            c = c.add(&b.scale(&Rational::from_integer(w.into())));
        }
        if c.as_rational().is_some() {
            continue;
        }
        let mp = c.minimal_polynomial();
        if mp.deg() == dim {
            return canonicalize(c, mp);
        }
    }
}

/// Quadratic generators are normalized to a square root of a squarefree
/// integer; other degrees are returned unchanged.
fn canonicalize(gen: FieldElement, mp: RatPolynomial) -> (FieldElement, RatPolynomial) {
    if mp.deg() != 2 {
        return (gen, mp);
    }
    // gen^2 + b gen + c = 0  =>  (gen + b/2)^2 = b^2/4 - c
    let b = mp.coeff(1);
    let c = mp.coeff(0);
    let half_b = &b / Rational::from_integer(2.into());
    let disc = &half_b * &half_b - &c;
    let (s, kernel_int) = square_free_kernel(&disc);
    let shifted = gen.add(&gen.field().from_rational(half_b));
    let root = shifted.scale(&s.recip());
    let kr = Rational::from_integer(kernel_int);
    let minpoly = RatPolynomial::new(vec![-kr, Rational::zero(), Rational::one()]);
    debug_assert!(root.eval_poly(&minpoly).is_zero());
    let root = if root.coeffs().iter().rev().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        root.neg()
    } else {
        root
    };
    (root, minpoly)
}
