//! Divisor classes of degree zero in Mumford form, with Cantor's
//! composition and reduction.

use serde::{Deserialize, Serialize};

use super::curve::HyperellipticCurve;
use super::place::{lift_sqrt, Divisor, Place, PlaceKind};
use crate::error::{invalid, Result};
use crate::exactalg::poly::{poly_inv_mod, poly_xgcd, RatPolynomial};

/// A semi-reduced divisor `E` given by `u` monic and `v` with `deg v < deg u`
/// and `u | v^2 - h`. It stands for the class of `E - deg(u) * inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MumfordDivisor {
    pub u: RatPolynomial,
    pub v: RatPolynomial,
}

impl MumfordDivisor {
    pub fn identity() -> Self {
        MumfordDivisor { u: RatPolynomial::one(), v: RatPolynomial::zero() }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one()
    }

    pub fn is_valid(&self, curve: &HyperellipticCurve) -> bool {
        self.u.is_monic()
            && self.v.degree().map_or(true, |d| d < self.u.deg())
            && (&(&self.v * &self.v) - curve.h()).rem(&self.u).is_zero()
    }

    pub fn neg(&self) -> Self {
        MumfordDivisor { u: self.u.clone(), v: (-&self.v).rem(&self.u) }
    }
}

/// Composition of two semi-reduced divisors; the result is semi-reduced but
/// not necessarily reduced.
pub fn cantor_compose(curve: &HyperellipticCurve, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
    let (d0, e1, e2) = poly_xgcd(&a.u, &b.u).expect("u is nonzero");
    let (d, c1, c2) = poly_xgcd(&d0, &(&a.v + &b.v)).expect("d0 is nonzero");
    let s1 = &c1 * &e1;
    let s2 = &c1 * &e2;
    let s3 = c2;
    let d2 = &d * &d;
    let u = (&a.u * &b.u).div_rem_unchecked(&d2).0;
    let num = &(&(&(&s1 * &a.u) * &b.v) + &(&(&s2 * &b.u) * &a.v)) + &(&s3 * &(&(&a.v * &b.v) + curve.h()));
    let v = num.div_rem_unchecked(&d).0.rem(&u);
    MumfordDivisor { u, v }
}

/// Reduces until `deg u <= g`; the reduced representative of a class is
/// unique.
pub fn cantor_reduce(curve: &HyperellipticCurve, a: &MumfordDivisor) -> MumfordDivisor {
    let mut cur = a.clone();
    while cur.u.deg() > curve.genus() {
        let u = (curve.h() - &(&cur.v * &cur.v)).div_rem_unchecked(&cur.u).0.monic();
        let v = (-&cur.v).rem(&u);
        cur = MumfordDivisor { u, v };
    }
    cur
}

pub fn cantor_add(curve: &HyperellipticCurve, a: &MumfordDivisor, b: &MumfordDivisor) -> MumfordDivisor {
    cantor_reduce(curve, &cantor_compose(curve, a, b))
}

/// `n * a` by double-and-add.
pub fn cantor_mul(curve: &HyperellipticCurve, a: &MumfordDivisor, n: i64) -> MumfordDivisor {
    let mut base = if n < 0 { a.neg() } else { a.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = MumfordDivisor::identity();
    while k > 0 {
        if k & 1 == 1 {
            acc = cantor_add(curve, &acc, &base);
        }
        base = cantor_add(curve, &base, &base);
        k >>= 1;
    }
    acc
}

/// A semi-reduced representative of the class of `D - deg(D) * inf`.
///
/// Inert places and conjugate pairs are pullbacks of points of the x-line,
/// hence multiples of `inf` up to a principal divisor, and are dropped;
/// ramified places count modulo 2.
pub fn semi_reduced_part(curve: &HyperellipticCurve, d: &Divisor) -> Result<MumfordDivisor> {
    let mut acc = MumfordDivisor::identity();
    let mut seen: Vec<&Place> = Vec::new();
    for (p, m) in d.iter() {
        let (u, n, v) = match p {
            Place::Infinity => continue,
            Place::Affine { kind: PlaceKind::Inert, .. } => continue,
            Place::Affine { u, kind: PlaceKind::Ramified } => {
                if m.rem_euclid(2) == 0 {
                    continue;
                }
                (u, 1, RatPolynomial::zero())
            }
            Place::Affine { u, kind: PlaceKind::Split { v } } => {
                let conj = p.conjugate();
                if seen.contains(&&conj) {
                    continue;
                }
                seen.push(p);
                let net = m - d.mult(&conj);
                if net == 0 {
                    continue;
                }
                let v = if net > 0 { v.clone() } else { (-v).rem(u) };
                let n = net.unsigned_abs() as u32;
                (u, n, lift_sqrt(curve.h(), u, &v, n))
            }
        };
        let un = u.pow(n);
        // CRT: acc.v mod acc.u and v mod u^n
        let inv = poly_inv_mod(&acc.u, &un)?;
        let t = (&(&v - &acc.v) * &inv).rem(&un);
        let new_v = &acc.v + &(&acc.u * &t);
        let new_u = &acc.u * &un;
        acc = MumfordDivisor { v: new_v.rem(&new_u), u: new_u };
    }
    debug_assert!(acc.is_valid(curve));
    Ok(acc)
}

/// Reduced Mumford representative of a degree-zero divisor class.
pub fn jacobian_class(curve: &HyperellipticCurve, d: &Divisor) -> Result<MumfordDivisor> {
    if d.degree() != 0 {
        return invalid(format!("divisor {d} has degree {} rather than 0", d.degree()));
    }
    d.validate(curve)?;
    Ok(cantor_reduce(curve, &semi_reduced_part(curve, d)?))
}

/// Whether a degree-zero divisor is the divisor of a function.
pub fn is_principal(curve: &HyperellipticCurve, d: &Divisor) -> Result<bool> {
    Ok(jacobian_class(curve, d)?.is_identity())
}
