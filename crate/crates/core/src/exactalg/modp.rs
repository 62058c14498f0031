//! Polynomials over a prime field `F_p` and their complete factorization:
//! squarefree decomposition, distinct-degree splitting and seeded
//! Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};

/// Polynomial over `F_p`, coefficients reduced into `[0, p)`, ascending,
/// without trailing zeros. The modulus is kept below `2^32` so products of
/// two residues fit in a `u64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModpPolynomial {
    modulus: u64,
    coeffs: Vec<u64>,
}

/// Factorization over `F_p`: `unit * prod f_i^{e_i}` with monic irreducible
/// `f_i`, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModpFactorList {
    pub unit: u64,
    pub factors: Vec<(ModpPolynomial, usize)>,
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

impl ModpPolynomial {
    /// Builds from signed coefficients, reducing mod `p`. Errors on a
    /// composite or out-of-range modulus.
    pub fn new(modulus: u64, coeffs: &[i64]) -> Result<Self> {
        check_modulus(modulus)?;
        let m = modulus as i128;
        let c = coeffs
            .iter()
            .map(|&x| ((x as i128 % m + m) % m) as u64)
            .collect();
        Ok(Self::from_residues(modulus, c))
    }

    pub(crate) fn from_residues(modulus: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModpPolynomial { modulus, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn zero(p: u64) -> Self {
        Self::from_residues(p, Vec::new())
    }

    fn one(p: u64) -> Self {
        Self::from_residues(p, vec![1])
    }

    fn x(p: u64) -> Self {
        Self::from_residues(p, vec![0, 1])
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading_coeff(), self.modulus);
        self.scale(inv)
    }

    fn scale(&self, c: u64) -> Self {
        let p = self.modulus;
        Self::from_residues(p, self.coeffs.iter().map(|&a| a * c % p).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + o.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        Self::from_residues(p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n)
            .map(|i| (self.coeffs.get(i).unwrap_or(&0) + p - o.coeffs.get(i).unwrap_or(&0)) % p)
            .collect();
        Self::from_residues(p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.modulus;
        if self.is_zero() || o.is_zero() {
            return Self::zero(p);
        }
        let mut v = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b) % p;
            }
        }
        Self::from_residues(p, v)
    }

    /// Division by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial mod p");
        let p = self.modulus;
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return (Self::zero(p), self.clone());
        }
        let inv = inv_mod(d.leading_coeff(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd] * inv % p;
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * dc % p) % p;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::from_residues(p, q), Self::from_residues(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Self {
        let p = self.modulus;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * (i as u64 % p) % p)
            .collect();
        Self::from_residues(p, v)
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*o` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.modulus;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.leading_coeff(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    fn pow_mod_poly(&self, e: &BigUint, m: &Self) -> Self {
        let p = self.modulus;
        let mut acc = Self::one(p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    fn pow_mod_u64(&self, e: u64, m: &Self) -> Self {
        self.pow_mod_poly(&BigUint::from(e), m)
    }
}

fn check_modulus(p: u64) -> Result<()> {
    if p >= (1 << 32) {
        return invalid(format!("modulus {p} too large (must be < 2^32)"));
    }
    if !is_prime_u64(p) {
        return invalid(format!("modulus {p} is not prime"));
    }
    Ok(())
}

/// Complete factorization over `F_p`. Randomized splitting is driven by
/// `seed`, so the output is reproducible.
pub fn factor_mod_p(f: &ModpPolynomial, seed: u64) -> Result<ModpFactorList> {
    check_modulus(f.modulus)?;
    if f.is_zero() {
        return invalid("factorization of the zero polynomial");
    }
    let unit = f.leading_coeff();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_mod_p(&f.monic()) {
        for (g, d) in distinct_degree(&part) {
            for h in equal_degree(&g, d, &mut rng) {
                factors.push((h, mult));
            }
        }
    }
    factors.sort_by(|a, b| (a.0.deg(), &a.0.coeffs).cmp(&(b.0.deg(), &b.0.coeffs)));
    Ok(ModpFactorList { unit, factors })
}

/// Number of irreducible factors (with multiplicity) of a squarefree
/// polynomial, without splitting equal-degree blocks.
pub(crate) fn count_factors_squarefree(f: &ModpPolynomial) -> usize {
    distinct_degree(&f.monic())
        .iter()
        .map(|(g, d)| g.deg() / d)
        .sum()
}

fn squarefree_mod_p(f: &ModpPolynomial) -> Vec<(ModpPolynomial, usize)> {
    let p = f.modulus;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let c0 = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c0).0;
    let mut c = c0;
    let mut i = 1;
    while !w.is_one() && !w.is_zero() && w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.deg() > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if c.deg() > 0 {
        // c is a p-th power: take the root coefficientwise.
        let root: Vec<u64> = c.coeffs.iter().step_by(p as usize).copied().collect();
        let root = ModpPolynomial::from_residues(p, root);
        for (g, m) in squarefree_mod_p(&root.monic()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

fn distinct_degree(f: &ModpPolynomial) -> Vec<(ModpPolynomial, usize)> {
    let p = f.modulus;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModpPolynomial::x(p);
    let mut h = x.clone();
    let mut i = 0;
    while rest.deg() >= 2 * (i + 1) {
        i += 1;
        h = h.pow_mod_u64(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.deg() > 0 {
            rest = rest.div_rem(&g).0.monic();
            h = h.rem(&rest);
            out.push((g, i));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &ModpPolynomial, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModpPolynomial> {
    let p = f.modulus;
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = ModpPolynomial::from_residues(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod_poly(&exp, f).sub(&ModpPolynomial::one(p))
        };
        let g = f.gcd(&b);
        if g.deg() > 0 && g.deg() < n {
            let h = f.div_rem(&g).0.monic();
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h, d, rng));
            return out;
        }
        if exp.is_zero() {
            unreachable!("equal-degree split with trivial exponent");
        }
    }
}

/// Reconstructs `unit * prod f_i^{e_i}`.
pub fn expand_modp(list: &ModpFactorList, p: u64) -> ModpPolynomial {
    let mut acc = ModpPolynomial::from_residues(p, vec![list.unit]);
    for (f, e) in &list.factors {
        for _ in 0..*e {
            acc = acc.mul(f);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(p: u64, c: &[i64]) -> ModpPolynomial {
        ModpPolynomial::new(p, c).unwrap()
    }

    #[test]
    fn x2_plus_1_mod_2_is_a_square() {
        let f = factor_mod_p(&mp(2, &[1, 0, 1]), 0).unwrap();
        assert_eq!(f.factors, vec![(mp(2, &[1, 1]), 2)]);
    }

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = factor_mod_p(&mp(5, &[1, 0, 1]), 0).unwrap();
        assert_eq!(f.factors, vec![(mp(5, &[-3, 1]), 1), (mp(5, &[-2, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_quartic_splits_mod_7() {
        let f = factor_mod_p(&mp(7, &[1, 0, -10, 0, 1]), 0).unwrap();
        assert!(f.factors.len() >= 2);
        assert!(f.factors.iter().all(|(g, _)| g.deg() <= 2));
        assert_eq!(expand_modp(&f, 7), mp(7, &[1, 0, -10, 0, 1]));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(ModpPolynomial::new(9, &[1, 1]).is_err());
        assert!(ModpPolynomial::new(1, &[1, 1]).is_err());
    }

    /// Irreducibility oracle over tiny fields: no monic factor of degree
    /// at most n/2 divides f, found by exhaustive enumeration.
    fn irreducible_by_enumeration(f: &ModpPolynomial) -> bool {
        let p = f.modulus();
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            let total = p.pow(d as u32);
            for idx in 0..total {
                let mut c = Vec::with_capacity(d + 1);
                let mut k = idx;
                for _ in 0..d {
                    c.push(k % p);
                    k /= p;
                }
                c.push(1);
                let g = ModpPolynomial::from_residues(p, c);
                if f.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn seeds_are_reproducible() {
        let f = mp(101, &[5, 3, 0, 7, 1, 0, 0, 1, 1]);
        assert_eq!(factor_mod_p(&f, 9).unwrap(), factor_mod_p(&f, 9).unwrap());
    }

    proptest! {
        #[test]
        fn factorization_is_complete(p in prop::sample::select(vec![2u64, 3, 5, 7, 13]),
                                     c in prop::collection::vec(-20i64..20, 2..8),
                                     seed in 0u64..4) {
            let f = mp(p, &c);
            prop_assume!(f.degree().unwrap_or(0) >= 1);
            let list = factor_mod_p(&f, seed).unwrap();
            prop_assert_eq!(expand_modp(&list, p), f);
            for (g, _) in &list.factors {
                prop_assert!(irreducible_by_enumeration(g));
                prop_assert_eq!(g.leading_coeff(), 1);
            }
        }
    }
}
