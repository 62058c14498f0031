//! Quadratic Hensel lifting of a coprime modular factorization from `p` to
//! `p^k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::ModpPolynomial;
use crate::error::{invalid, Error, Result};

/// Integer polynomial with coefficients reduced into `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnPolynomial {
    pub modulus: BigInt,
    pub coeffs: Vec<BigInt>,
}

impl ZnPolynomial {
    pub fn new(modulus: BigInt, coeffs: &[BigInt]) -> Self {
        let c = coeffs.iter().map(|x| x.mod_floor(&modulus)).collect();
        ZnPolynomial { coeffs: trim(c), modulus }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in the symmetric range `(-m/2, m/2]`.
    pub fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus / 2;
        self.coeffs
            .iter()
            .map(|c| if c > &half { c - &self.modulus } else { c.clone() })
            .collect()
    }

    /// Reduction to a smaller modulus dividing the current one.
    pub fn reduce(&self, m: &BigInt) -> ZnPolynomial {
        ZnPolynomial::new(m.clone(), &self.coeffs)
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn red(v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    trim(v.into_iter().map(|c| c.mod_floor(m)).collect())
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    red(
        (0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect(),
        m,
    )
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    red(
        (0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect(),
        m,
    )
}

pub(crate) fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    red(v, m)
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            r[i + j] -= &c * dc;
        }
        q[i] = c;
    }
    r.truncate(dd);
    (red(q, m), red(r, m))
}

fn to_big(f: &ModpPolynomial) -> Vec<BigInt> {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

/// One quadratic Hensel step (monic `g`, `h`): from `f = g h`,
/// `s g + t h = 1` mod `m` to the same identities mod `m^2`.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let e = sub(f, &mul_mod(g, h, m2), m2);
    let (q, r) = div_rem_monic(&mul_mod(s, &e, m2), h, m2);
    let g2 = add(g, &add(&mul_mod(t, &e, m2), &mul_mod(&q, g, m2), m2), m2);
    let h2 = add(h, &r, m2);
    let one = vec![BigInt::one()];
    let b = sub(&add(&mul_mod(s, &g2, m2), &mul_mod(t, &h2, m2), m2), &one, m2);
    let (c, d) = div_rem_monic(&mul_mod(s, &b, m2), &h2, m2);
    let s2 = sub(s, &d, m2);
    let t2 = sub(&sub(t, &mul_mod(t, &b, m2), m2), &mul_mod(&c, &g2, m2), m2);
    (g2, h2, s2, t2)
}

/// Lifts monic, pairwise coprime factors of `lc(f)^{-1} f mod p` to monic
/// factors of `lc(f)^{-1} f mod p^k`.
///
/// `f` is an integer polynomial whose leading coefficient is a unit mod `p`;
/// `factors` must multiply to `lc(f)^{-1} f` mod `p`.
pub fn hensel_lift(f: &[BigInt], factors: &[ModpPolynomial], k: u32) -> Result<Vec<ZnPolynomial>> {
    let Some(first) = factors.first() else {
        return invalid("no factors to lift");
    };
    let p = first.modulus();
    if factors.iter().any(|g| g.modulus() != p) {
        return invalid("factors with different moduli");
    }
    if factors.iter().any(|g| g.leading_coeff() != 1) {
        return invalid("factors must be monic");
    }
    if k == 0 {
        return invalid("lifting exponent must be positive");
    }
    let pb = BigInt::from(p);
    let lc = f.last().cloned().unwrap_or_default();
    if lc.mod_floor(&pb).is_zero() {
        return invalid("leading coefficient vanishes mod p");
    }
    // pairwise coprimality is checked as each factor is split off the rest
    let target_pk = pb.pow(k);
    let mut exp = 1u32;
    while exp < k {
        exp *= 2;
    }
    let big_m = pb.pow(exp);
    let lc_inv = mod_inverse(&lc, &big_m).expect("leading coefficient is a unit");
    let monic_f: Vec<BigInt> = red(f.iter().map(|c| c * &lc_inv).collect(), &big_m);

    {
        let mut prod = ModpPolynomial::new(p, &[1])?;
        for g in factors {
            prod = prod.mul(g);
        }
        let fp = ZnPolynomial::new(pb.clone(), &monic_f);
        if prod.coeffs().iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>() != fp.coeffs {
            return invalid("factors do not multiply to the target modulo p");
        }
    }

    let mut out = Vec::with_capacity(factors.len());
    let mut target = monic_f;
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            out.push(ZnPolynomial::new(target_pk.clone(), &target));
            break;
        }
        let mut rest = ModpPolynomial::new(p, &[1])?;
        for other in &factors[i + 1..] {
            rest = rest.mul(other);
        }
        let (gcd, s, t) = g.xgcd(&rest);
        if gcd.degree() != Some(0) {
            return Err(Error::LiftObstruction(format!(
                "factors share a common divisor of degree {} mod {p}",
                gcd.degree().unwrap_or(0)
            )));
        }
        let (mut gl, mut hl, mut sl, mut tl) = (to_big(g), to_big(&rest), to_big(&s), to_big(&t));
        let mut m = pb.clone();
        while m < big_m {
            let m2 = &m * &m;
            let fm2 = red(target.clone(), &m2);
            (gl, hl, sl, tl) = hensel_step(&fm2, &gl, &hl, &sl, &tl, &m2);
            m = m2;
        }
        out.push(ZnPolynomial::new(target_pk.clone(), &gl));
        target = hl;
    }
    Ok(out)
}

/// Symmetric-range integer coefficients of `c * prod factors mod m`.
pub(crate) fn product_symmetric(c: &BigInt, factors: &[&ZnPolynomial], m: &BigInt) -> Vec<BigInt> {
    let mut acc = vec![c.mod_floor(m)];
    for f in factors {
        acc = mul_mod(&acc, &f.coeffs, m);
    }
    let half = m / 2;
    acc.into_iter()
        .map(|x| if x > half { x - m } else { x })
        .collect()
}

pub(crate) fn abs_max(v: &[BigInt]) -> BigInt {
    v.iter().map(|c| c.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mp(p: u64, c: &[i64]) -> ModpPolynomial {
        ModpPolynomial::new(p, c).unwrap()
    }

    #[test]
    fn lift_square_root_of_minus_one() {
        let lifted = hensel_lift(&big(&[1, 0, 1]), &[mp(5, &[-2, 1]), mp(5, &[2, 1])], 2).unwrap();
        let m = BigInt::from(25);
        assert_eq!(lifted[0], ZnPolynomial::new(m.clone(), &big(&[-7, 1])));
        assert_eq!(lifted[1], ZnPolynomial::new(m, &big(&[7, 1])));
    }

    #[test]
    fn exact_factorization_lifts_to_itself() {
        let lifted = hensel_lift(&big(&[-1, 0, 1]), &[mp(3, &[-1, 1]), mp(3, &[1, 1])], 2).unwrap();
        assert_eq!(lifted[0].symmetric(), big(&[-1, 1]));
        assert_eq!(lifted[1].symmetric(), big(&[1, 1]));
    }

    #[test]
    fn repeated_factor_is_obstructed() {
        let err = hensel_lift(&big(&[1, 0, 1]), &[mp(2, &[1, 1]), mp(2, &[1, 1])], 2).unwrap_err();
        assert!(matches!(err, Error::LiftObstruction(_)));
    }

    #[test]
    fn lifting_is_consistent_mod_p() {
        // x^4 - 10x^2 + 1 mod 23 splits into linear factors
        let f = big(&[1, 0, -10, 0, 1]);
        let fl = super::super::modp::factor_mod_p(&mp(23, &[1, 0, -10, 0, 1]), 0).unwrap();
        let facs: Vec<_> = fl.factors.iter().map(|(g, _)| g.clone()).collect();
        let lifted = hensel_lift(&f, &facs, 6).unwrap();
        let m = BigInt::from(23).pow(6);
        let prod = product_symmetric(&BigInt::one(), &lifted.iter().collect::<Vec<_>>(), &m);
        assert_eq!(prod, f);
        for (l, g) in lifted.iter().zip(&facs) {
            let back = l.reduce(&BigInt::from(23));
            assert_eq!(back.coeffs, to_big(g));
        }
    }
}
