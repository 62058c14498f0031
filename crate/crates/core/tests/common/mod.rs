//! Fixtures and an independent contraction oracle shared by the
//! integration tests.
#![allow(dead_code)]

use num_traits::One;
use primpoints::contract::{mobius_relation, span_coordinates, ContractionSet};
use primpoints::exactalg::{int, RatPolynomial, Rational};
use primpoints::hypcurve::{
    fiber_divisor, function_space, places_over_x, CurveFunction, Divisor, HyperellipticCurve, Place,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn curve(h: &[i64]) -> HyperellipticCurve {
    HyperellipticCurve::new(RatPolynomial::from_ints(h)).unwrap()
}

/// `y^2 = x^3 + 1`.
pub fn e1() -> HyperellipticCurve {
    curve(&[1, 0, 0, 1])
}

pub fn poly_fn(c: &[i64]) -> CurveFunction {
    CurveFunction::from_poly(RatPolynomial::from_ints(c))
}

pub fn fiber(c: &HyperellipticCurve, f: &CurveFunction, t: &Rational) -> Divisor {
    fiber_divisor(c, f, Some(t)).unwrap().0
}

/// Zero divisor of `prod (x - r)` over distinct `r` where `x^3 + 1` does not
/// vanish, so the result has multiplicity one.
fn x_fibers(c: &HyperellipticCurve, roots: &[i64]) -> Divisor {
    let p = roots
        .iter()
        .fold(RatPolynomial::one(), |acc, r| &acc * &RatPolynomial::from_ints(&[-r, 1]));
    fiber(c, &CurveFunction::from_poly(p), &int(0))
}

/// Places of small height on `y^2 = x^3 + 1`.
pub fn place_pool(c: &HyperellipticCurve) -> Vec<Place> {
    let mut out = vec![Place::Infinity];
    for u in [[0, 1, 0], [-2, 1, 0], [1, 1, 0], [-1, 1, 0], [2, 1, 0], [-3, 1, 0], [1, 0, 1]] {
        let u = if u[2] == 0 { RatPolynomial::from_ints(&u[..2]) } else { RatPolynomial::from_ints(&u) };
        out.extend(places_over_x(c, &u).unwrap());
    }
    out
}

/// Seeded multiplicity-one divisors of degree between 2 and 6 on
/// `y^2 = x^3 + 1`: every third one is a union of `x`-fibers, the rest
/// random sums of distinct places.
pub fn random_divisors(count: usize, seed: u64) -> Vec<Divisor> {
    let c = e1();
    let pool = place_pool(&c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = if out.len() % 3 == 0 {
            let mut roots: Vec<i64> = (-3..=3).filter(|r| *r != -1).collect();
            roots.shuffle(&mut rng);
            let k = rng.gen_range(2..=3);
            x_fibers(&c, &roots[..k])
        } else {
            let mut pick = pool.clone();
            pick.shuffle(&mut rng);
            let target = rng.gen_range(2..=6);
            let mut d = Divisor::zero();
            for p in pick {
                if d.degree() + p.degree() as i64 <= target {
                    d.add_place(p, 1);
                }
            }
            d
        };
        if d.is_multiplicity_one() && d.degree() <= 6 && d.degree() >= 2 {
            out.push(d);
        }
    }
    out
}

/// Brute-force `Contr0(D)` for multiplicity-one `D`.
///
/// Every ordered disjoint pair `(A, B)` of equal degree `e` with
/// `1 < e < deg D` is tried, with no divisibility shortcut. A function with
/// divisor `A - B` is looked up in `L(B - A)`. Then `D = g^*(D')` holds iff
/// `e` divides `deg D = k e` and `D - B` is the zero divisor of `psi(g)` for
/// a polynomial `psi` of degree `< k`: the function with divisor
/// `(D - B) - (k - 1) B` must exist and lie in `span{1, g, ..., g^(k-1)}`.
pub fn oracle(c: &HyperellipticCurve, d: &Divisor) -> Vec<CurveFunction> {
    let places = d.support();
    let n = places.len();
    let deg = |mask: u32| -> i64 {
        (0..n).filter(|i| mask & (1 << i) != 0).map(|i| places[i].degree() as i64).sum()
    };
    let sub = |mask: u32| -> Divisor {
        let mut out = Divisor::zero();
        for (i, p) in places.iter().enumerate() {
            if mask & (1 << i) != 0 {
                out.add_place(p.clone(), 1);
            }
        }
        out
    };
    let total = d.degree();
    let mut found: Vec<CurveFunction> = Vec::new();
    for a in 1u32..(1 << n) {
        for b in 1u32..(1 << n) {
            let e = deg(a);
            if a & b != 0 || deg(b) != e || e <= 1 || e >= total {
                continue;
            }
            let (da, db) = (sub(a), sub(b));
            let Some(g) = function_space(c, &(&db - &da)).unwrap().into_iter().next() else {
                continue;
            };
            if total % e != 0 {
                continue;
            }
            let k = total / e;
            let target = &db.scale(k - 1) - &(d - &db);
            let Some(psi_g) = function_space(c, &target).unwrap().into_iter().next() else {
                continue;
            };
            let mut powers = vec![CurveFunction::constant(Rational::one())];
            for _ in 1..k {
                let next = powers.last().unwrap().mul(&g, c);
                powers.push(next);
            }
            if span_coordinates(&powers, &psi_g).is_none() {
                continue;
            }
            if !found.iter().any(|h| mobius_relation(c, h, &g).is_some()) {
                found.push(g);
            }
        }
    }
    found
}

/// Same number of classes, and each oracle class is Mobius-equivalent to an
/// enumerated one.
pub fn same_classes(c: &HyperellipticCurve, set: &ContractionSet, oracle: &[CurveFunction]) -> bool {
    set.contractions.len() == oracle.len()
        && oracle
            .iter()
            .all(|g| set.contractions.iter().any(|k| mobius_relation(c, &k.g, g).is_some()))
}
