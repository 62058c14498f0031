//! Factorization over the rationals by the Zassenhaus method: factor modulo a
//! good prime, Hensel-lift past the Mignotte bound, then recombine subsets of
//! the lifted factors by exact trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::hensel::{abs_max, hensel_lift, product_symmetric, ZnPolynomial};
use super::modp::{count_factors_squarefree, factor_mod_p, ModpPolynomial};
use super::poly::{squarefree_decomposition, RatPolynomial};
use super::rational::{serde_rational, Rational};
use crate::error::{invalid, Result};

/// `unit * prod factor^multiplicity`, factors monic irreducible and distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorList {
    #[serde(with = "serde_rational")]
    pub unit: Rational,
    pub factors: Vec<(RatPolynomial, usize)>,
}

impl FactorList {
    pub fn expand(&self) -> RatPolynomial {
        let mut acc = RatPolynomial::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e as u32);
        }
        acc
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Tuning knobs for [`factor_over_rationals_with`].
#[derive(Clone, Copy, Debug)]
pub struct FactorOptions {
    /// Seed for the modular equal-degree splitting.
    pub seed: u64,
    /// Number of good primes tried; the one with fewest modular factors wins.
    pub primes_tried: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { seed: 0, primes_tried: 3 }
    }
}

pub fn factor_over_rationals(p: &RatPolynomial) -> Result<FactorList> {
    factor_over_rationals_with(p, FactorOptions::default())
}

pub fn factor_over_rationals_with(p: &RatPolynomial, opts: FactorOptions) -> Result<FactorList> {
    if p.is_zero() {
        return invalid("factorization of the zero polynomial");
    }
    let unit = p.leading_coeff();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        let (_, prim) = part.integer_primitive_part();
        for g in factor_squarefree_integer(&prim, opts) {
            factors.push((RatPolynomial::from_bigints(&g).monic(), mult));
        }
    }
    factors.sort_by(|a, b| (a.0.deg(), a.0.coeffs()).cmp(&(b.0.deg(), b.0.coeffs())));
    Ok(FactorList { unit, factors })
}

/// Irreducibility test over the rationals.
pub fn is_irreducible(p: &RatPolynomial) -> bool {
    p.deg() >= 1 && factor_over_rationals(p).map(|f| f.is_irreducible()).unwrap_or(false)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| super::modp::is_prime_u64(n))
}

fn reduce_mod(f: &[BigInt], p: u64) -> ModpPolynomial {
    let pb = BigInt::from(p);
    let c: Vec<i64> = f
        .iter()
        .map(|x| {
            let r: BigInt = x.mod_floor(&pb);
            i64::try_from(r).expect("residue fits in i64")
        })
        .collect();
    ModpPolynomial::new(p, &c).expect("prime modulus")
}

/// Factors a squarefree primitive integer polynomial with positive leading
/// coefficient into primitive irreducible integer polynomials.
fn factor_squarefree_integer(f: &[BigInt], opts: FactorOptions) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Pull out a power of x first; it keeps the constant-term filter useful.
    if f[0].is_zero() {
        let rest = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_integer(&rest, opts));
        return out;
    }
    let lc = f[n].clone();

    let mut best: Option<(usize, u64)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod(f, p);
        if fp.degree() != Some(n) || fp.gcd(&fp.derivative()).degree() != Some(0) {
            continue;
        }
        let count = count_factors_squarefree(&fp);
        if count == 1 {
            return vec![f.to_vec()];
        }
        if best.is_none_or(|(c, _)| count < c) {
            best = Some((count, p));
        }
        tried += 1;
        if tried >= opts.primes_tried.max(1) {
            break;
        }
    }
    let (_, p) = best.expect("a good prime always exists for squarefree input");
    let modular = factor_mod_p(&reduce_mod(f, p), opts.seed).expect("prime modulus");
    let facs: Vec<ModpPolynomial> = modular.factors.into_iter().map(|(g, _)| g).collect();

    // Mignotte: any factor g of f has |g_i| <= 2^n ||f||_2; the recombined
    // candidate is lc * g / lc(g), so include |lc|.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (num_integer::Roots::sqrt(&norm2) + 1) * lc.abs();
    let two_b = &bound * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= two_b {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &facs, k).expect("squarefree mod p so factors are coprime");
    recombine(f.to_vec(), lifted, &pk)
}

fn recombine(f: Vec<BigInt>, lifted: Vec<ZnPolynomial>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining: Vec<ZnPolynomial> = lifted;
    let mut fstar = f;
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let b = fstar.last().unwrap().clone();
        let b_const = &b * &fstar[0];
        let mut comb: Vec<usize> = (0..s).collect();
        loop {
            // constant-term filter before building the full product
            let mut c0 = b.mod_floor(m);
            for &i in &comb {
                c0 = (c0 * remaining[i].coeffs.first().cloned().unwrap_or_default()).mod_floor(m);
            }
            let half = m / 2;
            if c0 > half {
                c0 -= m;
            }
            if !c0.is_zero() && b_const.is_multiple_of(&c0) {
                let chosen: Vec<&ZnPolynomial> = comb.iter().map(|&i| &remaining[i]).collect();
                let g = primitive(product_symmetric(&b, &chosen, m));
                if let Some(q) = exact_int_div(&fstar, &g) {
                    out.push(g);
                    fstar = primitive(q);
                    let mut keep = Vec::new();
                    for (i, z) in remaining.into_iter().enumerate() {
                        if !comb.contains(&i) {
                            keep.push(z);
                        }
                    }
                    remaining = keep;
                    continue 'outer;
                }
            }
            if !next_combination(&mut comb, remaining.len()) {
                break;
            }
        }
        s += 1;
    }
    if fstar.len() > 1 {
        out.push(fstar);
    }
    out
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Exact division in `Z[x]`; `None` unless `g` divides `f` with integral
/// quotient.
fn exact_int_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return None;
    }
    if abs_max(g).is_zero() {
        return None;
    }
    let lc = &g[dg];
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - dg];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + dg].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, gc) in g.iter().enumerate() {
            r[i + j] -= &c * gc;
        }
        q[i] = c;
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}
