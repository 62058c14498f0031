use num_traits::Zero;

use super::*;
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::{int, Rational};
use crate::hypcurve::{
    fiber_divisor, function_with_divisor, places_over_x, CurveFunction, Divisor, HyperellipticCurve, Place,
};

fn e1() -> HyperellipticCurve {
    HyperellipticCurve::new(RatPolynomial::from_ints(&[1, 0, 0, 1])).unwrap()
}

fn x() -> CurveFunction {
    CurveFunction::x()
}

fn y() -> CurveFunction {
    CurveFunction::y()
}

fn x2() -> CurveFunction {
    CurveFunction::from_poly(RatPolynomial::from_ints(&[0, 0, 1]))
}

fn fiber(f: &CurveFunction, t: i64) -> Divisor {
    fiber_divisor(&e1(), f, Some(&int(t))).unwrap().0
}

fn places_at(c: &HyperellipticCurve, u: &[i64]) -> Vec<Place> {
    places_over_x(c, &RatPolynomial::from_ints(u)).unwrap()
}

#[test]
fn x_squared_fiber_contracts_via_x() {
    let c = e1();
    let d = fiber(&x2(), 4);
    assert_eq!(d.degree(), 4);
    assert!(d.is_multiplicity_one());
    let set = enumerate_contr0(&c, &d).unwrap();
    assert_eq!(set.contractions.len(), 1);
    let k = &set.contractions[0];
    assert_eq!(k.e, 2);
    assert!(k.pullback_verified);
    let m = mobius_relation(&c, &x(), &k.g).expect("Mobius equivalent to x");
    // the x-map sends D to {2, -2}; push those through the Mobius map
    let images: Vec<TargetPoint> = [int(2), int(-2)]
        .iter()
        .map(|t| {
            let den = &m[2] * t + &m[3];
            if den.is_zero() {
                TargetPoint::Infinity
            } else {
                TargetPoint::rational((&m[0] * t + &m[1]) / den)
            }
        })
        .collect();
    let mut got: Vec<TargetPoint> = k.target_divisor.iter().map(|(p, _)| p.clone()).collect();
    let mut want = images;
    got.sort();
    want.sort();
    assert_eq!(got, want);

    let via_x = Contraction {
        g: x(),
        e: 2,
        target_divisor: pushforward(&c, &x(), &d).unwrap().unwrap(),
        pullback: d.clone(),
        pullback_verified: true,
    };
    let mut pts: Vec<Rational> = via_x.target_divisor.iter().map(|(p, _)| p.as_rational().unwrap()).collect();
    pts.sort();
    assert_eq!(pts, vec![int(-2), int(2)]);
}

#[test]
fn degree_three_fiber_has_no_contraction() {
    let c = e1();
    let d = fiber(&y(), 2);
    assert_eq!(d.degree(), 3);
    assert!(enumerate_contr0(&c, &d).unwrap().contractions.is_empty());
}

#[test]
fn mixed_divisor_contracts_by_group_law() {
    // with P = (2, 3) of order 6: (0, 1) = 2P and (-1, 0) = 3P, so
    // (2,3) + (0,1) and (-1,0) + inf are linearly equivalent and a degree-2
    // map sends them to 0 and infinity; the other two splittings are not
    let c = e1();
    let p = |u: &[i64], v: i64| {
        places_at(&c, u).into_iter().find(|q| q.rational_point().unwrap().1 == int(v)).unwrap()
    };
    let a = &Divisor::from_place(p(&[-2, 1], 3), 1) + &Divisor::from_place(p(&[0, 1], 1), 1);
    let b = &Divisor::from_place(p(&[1, 1], 0), 1) + &Divisor::infinity(1);
    let d = &a + &b;
    assert_eq!(d.degree(), 4);
    let set = enumerate_contr0(&c, &d).unwrap();
    assert_eq!(set.contractions.len(), 1);
    let g = function_with_divisor(&c, &a, &b).unwrap();
    assert!(mobius_relation(&c, &set.contractions[0].g, &g).is_some());
}

#[test]
fn multiplicity_violation_is_rejected() {
    let c = e1();
    let p = places_at(&c, &[0, 1])[0].clone();
    let mut d = Divisor::from_place(p.clone(), 1);
    d.add_place(p, 1);
    d.add_place(Place::Infinity, 2);
    assert!(matches!(enumerate_contr0(&c, &d), Err(crate::Error::PreconditionFailed(_))));
}

#[test]
fn factors_through_x_map() {
    let c = e1();
    let d = fiber(&x2(), 4);
    let k = Contraction {
        g: x(),
        e: 2,
        target_divisor: pushforward(&c, &x(), &d).unwrap().unwrap(),
        pullback: d.clone(),
        pullback_verified: true,
    };
    let f_plus_y = x2().add(&y());
    let f_plus_x = x2().add(&x());
    assert!(factors_through(&c, &x2(), &k).unwrap());
    assert!(!factors_through(&c, &f_plus_y, &k).unwrap());
    // x^2 + x has poles only at infinity, outside g^*(D'); over the
    // polar divisor of x^2 + x it lies in Q(x)
    let at_inf = Contraction {
        target_divisor: vec![(TargetPoint::Infinity, 2)],
        pullback: Divisor::infinity(4),
        ..k.clone()
    };
    assert!(factors_through(&c, &f_plus_x, &at_inf).unwrap());
    assert!(factors_through(&c, &x2(), &at_inf).unwrap());
    assert!(matches!(
        factors_through(&c, &CurveFunction::constant(int(3)), &k),
        Err(crate::Error::DegreeUndefined)
    ));
}

#[test]
fn dimension_comparisons() {
    let c = e1();
    let d4 = fiber(&x2(), 4);
    let set = enumerate_contr0(&c, &d4).unwrap();
    let r = dimension_comparison(&c, &d4, &set.contractions[0]).unwrap();
    assert_eq!((r.dim_pd, r.dim_pd_prime, r.holds), (3, 2, true));

    // x-fibers over 1, 3 and -2 are three inert places of degree 2
    let cubic = RatPolynomial::from_ints(&[-1, 1]) * RatPolynomial::from_ints(&[-3, 1]) * RatPolynomial::from_ints(&[2, 1]);
    let d6 = fiber_divisor(&c, &CurveFunction::from_poly(cubic), Some(&Rational::zero())).unwrap().0;
    assert_eq!(d6.degree(), 6);
    assert_eq!(d6.support().len(), 3);
    let set = enumerate_contr0(&c, &d6).unwrap();
    let two = set.contractions.iter().find(|k| k.e == 2).expect("x-map");
    let r = dimension_comparison(&c, &d6, two).unwrap();
    assert_eq!((r.dim_pd, r.dim_pd_prime, r.holds), (5, 3, true));
    for k in &set.contractions {
        assert!(dimension_comparison(&c, &d6, k).unwrap().holds);
    }
}

#[test]
fn locus_examples() {
    let c = e1();
    let d = fiber(&x2(), 4);
    match imprimitive_locus_test(&c, &d, &x2()).unwrap() {
        LocusVerdict::Imprimitive { via } => assert!(mobius_relation(&c, &via.g, &x()).is_some()),
        v => panic!("{v:?}"),
    }
    assert_eq!(imprimitive_locus_test(&c, &d, &x2().add(&y())).unwrap(), LocusVerdict::NoFactorization);
    assert_eq!(imprimitive_locus_test(&c, &d, &y()).unwrap(), LocusVerdict::DegreeDeficient);
}

#[test]
fn locus_at_infinity() {
    let c = e1();
    let t = LocusTester::for_divisor(&c, &Divisor::infinity(4)).unwrap();
    assert_eq!(t.basis().len(), 4);
    let f = x2().add(&x()).scale(&int(-3));
    assert!(t.classify(&f).unwrap().is_imprimitive());
    assert_eq!(t.classify(&x2().add(&y())).unwrap(), LocusVerdict::NoFactorization);
    assert_eq!(t.classify(&y()).unwrap(), LocusVerdict::DegreeDeficient);
}

#[test]
fn locus_families_by_approximate_root() {
    // genus 1, D = 6 inf: degree-3 maps with a triple pole at infinity form
    // a family (L(3 inf) = <1, x, y>), so composites of y + x are found by
    // the root of the expansion
    let c = e1();
    let t = LocusTester::for_divisor(&c, &Divisor::infinity(6)).unwrap();
    assert_eq!(t.contractions().infinity_families, vec![3]);
    let g = y().add(&x().scale(&int(2)));
    let f = g.mul(&g, &c).add(&g.scale(&int(5))).add(&CurveFunction::constant(int(1)));
    match t.classify(&f).unwrap() {
        LocusVerdict::Imprimitive { via } => {
            assert_eq!(via.e, 3);
            assert!(via.pullback_verified);
            assert!(mobius_relation(&c, &via.g, &g).is_some());
        }
        v => panic!("{v:?}"),
    }
    // x^3 = (x)^3 via the x-map
    let x3 = CurveFunction::from_poly(RatPolynomial::from_ints(&[0, 1, 0, 1]));
    assert!(t.classify(&x3).unwrap().is_imprimitive());
    // y^2 + x y is not a composite
    let h = y().mul(&y(), &c).add(&x().mul(&y(), &c));
    assert_eq!(t.classify(&h).unwrap(), LocusVerdict::NoFactorization);
}

#[test]
fn mobius_relation_checks_at_points() {
    let c = e1();
    let g = x();
    let h = x().add(&CurveFunction::constant(int(1))).mul(&x().sub(&CurveFunction::constant(int(3))).inv(&c).unwrap(), &c);
    let m = mobius_relation(&c, &g, &h).unwrap();
    let pts = [(0, 1), (0, -1), (2, 3), (2, -3), (-1, 0)];
    let mut checked = 0;
    for (px, py) in pts {
        let (px, py) = (int(px), int(py));
        let (Some(gv), Some(hv)) = (g.eval_at(&px, &py), h.eval_at(&px, &py)) else { continue };
        let den = &m[2] * &gv + &m[3];
        if den.is_zero() {
            continue;
        }
        assert_eq!((&m[0] * &gv + &m[1]) / den, hv);
        checked += 1;
    }
    assert!(checked >= 3);
    assert!(mobius_relation(&c, &x(), &y()).is_none());
}

#[test]
fn image_points_on_every_place_kind() {
    let c = e1();
    let g = x2().add(&y());
    for u in [vec![0, 1], vec![1, 1], vec![-2, 1], vec![1, 0, 1]] {
        for p in places_at(&c, &u) {
            let w = image_point(&c, &g, &p).unwrap();
            let fib = pullback_point(&c, &g, &w).unwrap();
            assert!(fib.mult(&p) > 0, "{p} not in fiber over {w}");
        }
    }
    assert_eq!(image_point(&c, &g, &Place::Infinity).unwrap(), TargetPoint::Infinity);
    let inv = g.inv(&c).unwrap();
    assert_eq!(image_point(&c, &inv, &Place::Infinity).unwrap(), TargetPoint::rational(Rational::zero()));
}

#[test]
fn image_point_with_vanishing_denominator() {
    // g = (y - 1)/x at (0, 1): numerator and denominator both vanish
    let c = e1();
    let g = y().sub(&CurveFunction::constant(int(1))).mul(&x().inv(&c).unwrap(), &c);
    let p = places_at(&c, &[0, 1]).into_iter().find(|p| p.rational_point().unwrap().1 == int(1)).unwrap();
    // (y - 1)/x = x^2 / (y + 1), which is 0 at (0, 1)
    assert_eq!(image_point(&c, &g, &p).unwrap(), TargetPoint::rational(Rational::zero()));
}

#[test]
fn targets_without_two_rational_points_are_not_enumerated() {
    // the x^2-fiber over 5 is one inert place of degree 4; x contracts it
    // onto the degree-2 point x^2 = 5 of P^1, which has no rational
    // zero/pole pair, so subdivisor pairs cannot reach it
    let c = e1();
    let d = fiber(&x2(), 5);
    assert_eq!(d.support().len(), 1);
    assert!(enumerate_contr0(&c, &d).unwrap().contractions.is_empty());
    let via_x = Contraction {
        g: x(),
        e: 2,
        target_divisor: pushforward(&c, &x(), &d).unwrap().unwrap(),
        pullback: d.clone(),
        pullback_verified: true,
    };
    assert_eq!(via_x.target_divisor.len(), 1);
    assert_eq!(via_x.target_divisor[0].0.degree(), 2);
}
