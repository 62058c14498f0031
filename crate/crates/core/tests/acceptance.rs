//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use primpoints::contract::{
    dimension_comparison, enumerate_contr0, imprimitive_locus_test, mobius_relation, Contraction, LocusTester,
    LocusVerdict,
};
use primpoints::exactalg::{
    factor_mod_p, factor_over_rationals, int, is_irreducible, rat, ModpPolynomial, RatPolynomial,
};
use primpoints::hypcurve::{riemann_roch_basis, CurveFunction, Divisor, HyperellipticCurve};
use primpoints::numfield::{is_primitive_field, CertMethod, Policy, Verdict};
use primpoints::prospect::{
    density_experiment, find_primitive_function, prospect, ProspectLimits, SampleMode,
    SearchBudget, SpecializationStatus,
};
use primpoints::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs as f64, || {
        format!("took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64())
    })
}

fn c1_riemann_roch() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for h in [&[1, 0, 0, 1][..], &[-1, 0, 0, 0, 0, 1], &[-2, 0, 0, 0, 0, 0, 0, 1]] {
        let c = curve(h);
        let g = c.genus() as i64;
        for n in (2 * g - 1)..=12 {
            let dim = riemann_roch_basis(&c, &Divisor::infinity(n)).map_err(|e| e.to_string())?.dimension as i64;
            ensure(dim == n - g + 1, || format!("g = {g}, n = {n}: dim {dim} != {}", n - g + 1))?;
            checked += 1;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("{checked} spaces, dim L(n inf) = n - g + 1"))
}

fn c2_desk_check() -> Outcome {
    let start = Instant::now();
    let c = e1();
    let f = CurveFunction::new(RatPolynomial::from_ints(&[0, 0, 1]), RatPolynomial::one());
    let r = prospect(&c, &f, &ProspectLimits { t_count: 200, ..Default::default() }).map_err(|e| e.to_string())?;
    ensure(r.specializations.len() == 200, || "fewer than 200 t values".into())?;
    for p in &r.primitive_points {
        ensure(p.certificate.verify(), || format!("certificate at t = {} does not verify", p.t))?;
        // independent re-derivation through principal subfields
        let general = is_primitive_field(&p.minimal_polynomial, Policy::ForceGeneral).map_err(|e| e.to_string())?;
        ensure(general.verdict == Verdict::Primitive, || format!("subfields disagree at t = {}", p.t))?;
        ensure(p.minimal_polynomial.deg() == 4, || "non-quartic point".into())?;
    }
    let n = r.primitive_points.len();
    ensure(n >= 100, || format!("only {n} primitive points"))?;
    within(start.elapsed(), 60)?;
    Ok(format!("{n} certified primitive quartic points from 200 t values"))
}

fn c3_density(contractions: &mut Vec<(HyperellipticCurve, Divisor, Contraction)>) -> Outcome {
    let c = e1();
    let d = Divisor::infinity(4);
    let mut parts = Vec::new();
    for h in [1u32, 2, 4, 8] {
        let t0 = Instant::now();
        let r = density_experiment(&c, &d, h, SampleMode::Exhaustive, None).map_err(|e| e.to_string())?;
        let want = rat(1, 2 * h as i64 + 1);
        ensure(r.imprimitive_among_full_degree == want, || {
            format!("H = {h}: {} != {}", r.imprimitive_among_full_degree, want)
        })?;
        let sum = &r.degree_deficient_fraction + &r.imprimitive_fraction + &r.primitive_fraction;
        ensure(sum == int(1), || format!("H = {h}: fractions sum to {sum}"))?;
        if h == 8 {
            within(t0.elapsed(), 120)?;
        }
        parts.push(format!("H={h}: {}", r.imprimitive_among_full_degree));
    }
    let tester = LocusTester::for_divisor(&c, &d).map_err(|e| e.to_string())?;
    ensure(tester.contractions().contractions.len() == 1, || "expected only the x-map".into())?;
    for k in &tester.contractions().contractions {
        contractions.push((c.clone(), d.clone(), k.clone()));
    }
    Ok(parts.join(", "))
}

fn c4_locus_consistency(contractions: &mut Vec<(HyperellipticCurve, Divisor, Contraction)>) -> Outcome {
    let c = e1();
    let f = poly_fn(&[0, 0, 1]);
    let r = prospect(&c, &f, &ProspectLimits { t_count: 100, paranoid: true, ..Default::default() })
        .map_err(|e| e.to_string())?;
    let mut irreducible = 0;
    for s in &r.specializations {
        if let SpecializationStatus::Irreducible { certificate } = &s.status {
            irreducible += 1;
            ensure(certificate.verdict == Verdict::Imprimitive, || format!("t = {} primitive", s.t))?;
            let w = certificate.witness.as_ref().ok_or("missing witness")?;
            ensure(w.degree == 2 && w.verify() && certificate.verify(), || format!("bad witness at t = {}", s.t))?;
        }
    }
    ensure(irreducible > 0, || "no irreducible fiber".into())?;
    // the contract side agrees: x^2 factors through a contraction of its fiber
    let d = fiber(&c, &f, &int(4));
    match imprimitive_locus_test(&c, &d, &f).map_err(|e| e.to_string())? {
        LocusVerdict::Imprimitive { via } => contractions.push((c.clone(), d, via)),
        v => return Err(format!("locus test gave {v:?}")),
    }
    Ok(format!("{irreducible} irreducible fibers of x^2, all imprimitive with quadratic witness"))
}

fn c5_oracle(contractions: &mut Vec<(HyperellipticCurve, Divisor, Contraction)>) -> Outcome {
    let c = e1();
    let d = fiber(&c, &poly_fn(&[0, 0, 1]), &int(4));
    let set = enumerate_contr0(&c, &d).map_err(|e| e.to_string())?;
    ensure(set.contractions.len() == 1, || format!("{} classes", set.contractions.len()))?;
    ensure(mobius_relation(&c, &set.contractions[0].g, &CurveFunction::x()).is_some(), || {
        "class is not the x-map".into()
    })?;
    ensure(same_classes(&c, &set, &oracle(&c, &d)), || "oracle disagrees on the x^2 fiber".into())?;
    contractions.extend(set.contractions.into_iter().map(|k| (c.clone(), d.clone(), k)));
    let mut with_classes = 0;
    for d in random_divisors(20, 7) {
        let set = enumerate_contr0(&c, &d).map_err(|e| e.to_string())?;
        let want = oracle(&c, &d);
        ensure(same_classes(&c, &set, &want), || {
            format!("{d}: enumerated {} vs oracle {}", set.contractions.len(), want.len())
        })?;
        with_classes += usize::from(!set.contractions.is_empty());
        contractions.extend(set.contractions.into_iter().map(|k| (c.clone(), d.clone(), k)));
    }
    Ok(format!("x^2 fiber: 1 class; 20 random divisors agree ({with_classes} with contractions)"))
}

fn c6_dimension(contractions: &[(HyperellipticCurve, Divisor, Contraction)]) -> Outcome {
    ensure(!contractions.is_empty(), || "no contractions collected".into())?;
    let mut violations = 0;
    for (c, d, k) in contractions {
        let r = dimension_comparison(c, d, k).map_err(|e| e.to_string())?;
        if !r.holds || r.dim_pd <= r.dim_pd_prime {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!("{} contractions, 0 violations", contractions.len()))
}

fn random_monic(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> RatPolynomial {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    c.push(1);
    RatPolynomial::from_ints(&c)
}

fn c7_engines() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut quartics, mut imprimitive) = (0, 0);
    while quartics < 200 {
        let m = random_monic(&mut rng, 4, 10);
        if !is_irreducible(&m) {
            continue;
        }
        let fast = is_primitive_field(&m, Policy::Auto).map_err(|e| e.to_string())?;
        let slow = is_primitive_field(&m, Policy::ForceGeneral).map_err(|e| e.to_string())?;
        ensure(fast.method == CertMethod::ResolventCubic, || format!("{m}: fast path not taken"))?;
        ensure(fast.verdict == slow.verdict, || format!("{m}: engines disagree"))?;
        imprimitive += usize::from(fast.verdict == Verdict::Imprimitive);
        quartics += 1;
    }
    let mut odd = 0;
    while odd < 50 {
        let deg = if odd % 2 == 0 { 5 } else { 7 };
        let m = random_monic(&mut rng, deg, 10);
        if !is_irreducible(&m) {
            continue;
        }
        let fast = is_primitive_field(&m, Policy::Auto).map_err(|e| e.to_string())?;
        let slow = is_primitive_field(&m, Policy::ForceGeneral).map_err(|e| e.to_string())?;
        ensure(fast.method == CertMethod::PrimeDegree && slow.verdict == Verdict::Primitive, || {
            format!("{m}: prime-degree shortcut not confirmed")
        })?;
        odd += 1;
    }
    let biquad = is_primitive_field(&RatPolynomial::from_ints(&[1, 0, -10, 0, 1]), Policy::Auto)
        .map_err(|e| e.to_string())?;
    let w = biquad.witness.as_ref().ok_or("x^4 - 10x^2 + 1 has no witness")?;
    ensure(w.generator_minpoly == RatPolynomial::from_ints(&[-2, 0, 1]) && biquad.verify(), || {
        format!("x^4 - 10x^2 + 1 witness {}", w.generator_minpoly)
    })?;
    let prim = is_primitive_field(&RatPolynomial::from_ints(&[3, 0, -4, -1, 1]), Policy::Auto)
        .map_err(|e| e.to_string())?;
    ensure(prim.verdict == Verdict::Primitive && prim.verify(), || "x^4 - x^3 - 4x^2 + 3 not primitive".into())?;
    Ok(format!("200 quartics agree ({imprimitive} imprimitive), 50 quintics/septics confirmed, fixed cases ok"))
}

/// Eisenstein at 2 or 3, hence irreducible independently of the factorizer.
fn eisenstein(rng: &mut ChaCha8Rng, deg: usize) -> RatPolynomial {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let mut c: Vec<i64> = (0..deg).map(|_| p * rng.gen_range(-3..=3)).collect();
    c[0] = p * loop {
        let k = rng.gen_range(-3i64..=3);
        if k % p != 0 {
            break k;
        }
    };
    c.push(1);
    RatPolynomial::from_ints(&c)
}

fn c8_factorization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for round in 0..100 {
        let mut known: Vec<(RatPolynomial, usize)> = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let g = if rng.gen_bool(0.3) {
                RatPolynomial::from_ints(&[rng.gen_range(-5..=5), 1])
            } else {
                let deg = rng.gen_range(2..=5);
                eisenstein(&mut rng, deg)
            };
            if known.iter().all(|(h, _)| h != &g) {
                known.push((g, rng.gen_range(1..=2)));
            }
        }
        let unit = int(rng.gen_range(1..=4)) * if rng.gen_bool(0.5) { int(1) } else { int(-1) };
        let product = known
            .iter()
            .fold(RatPolynomial::constant(unit.clone()), |acc, (g, e)| &acc * &g.pow(*e as u32));
        let fl = factor_over_rationals(&product).map_err(|e| e.to_string())?;
        let mut got = fl.factors.clone();
        got.sort();
        known.sort();
        ensure(fl.unit == unit && got == known && fl.expand() == product, || {
            format!("round {round}: {product} not reconstructed")
        })?;
    }
    let m = RatPolynomial::from_ints(&[1, 0, -10, 0, 1]);
    ensure(is_irreducible(&m), || "x^4 - 10x^2 + 1 reported reducible".into())?;
    let mut primes = 0;
    for p in (2u64..=50).filter(|p| (2..*p).all(|q| p % q != 0)) {
        let mp = ModpPolynomial::new(p, &[1, 0, -10, 0, 1]).map_err(|e| e.to_string())?;
        let fl = factor_mod_p(&mp, 0).map_err(|e| e.to_string())?;
        let pieces: usize = fl.factors.iter().map(|(_, e)| e).sum();
        ensure(pieces >= 2, || format!("irreducible mod {p}"))?;
        primes += 1;
    }
    Ok(format!("100 products reconstructed; x^4 - 10x^2 + 1 irreducible, split mod all {primes} primes <= 50"))
}

fn c9_find_function() -> Outcome {
    let start = Instant::now();
    let budget = SearchBudget { paranoid: true, ..Default::default() };
    let e = e1();
    let mut found = Vec::new();
    for d in [3, 4] {
        let r = find_primitive_function(&e, d, &budget).map_err(|err| format!("g = 1, d = {d}: {err}"))?;
        ensure(r.certificate.verify(), || format!("d = {d}: certificate fails"))?;
        found.push(format!("d={d}: {} @ t={}", r.f, r.t));
    }
    match find_primitive_function(&e, 2, &budget) {
        Err(Error::OutOfTheoremRange { .. }) => {}
        other => return Err(format!("d = 2 gave {other:?}")),
    }
    let c2 = curve(&[-1, 0, 0, 0, 0, 1]);
    for d in 5..=7 {
        let r = find_primitive_function(&c2, d, &budget).map_err(|err| format!("g = 2, d = {d}: {err}"))?;
        ensure(r.certificate.verify(), || format!("g = 2, d = {d}: certificate fails"))?;
        ensure(r.certificate.modulus.deg() == d, || format!("g = 2, d = {d}: wrong degree"))?;
        found.push(format!("g=2 d={d}: {} @ t={}", r.f, r.t));
    }
    within(start.elapsed(), 120)?;
    Ok(found.join("; "))
}

fn main() {
    let mut contractions = Vec::new();
    let mut failed = 0;
    let mut run = |n: usize, name: &str, outcome: Outcome, elapsed: Duration| {
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {n} PASS [{name}] {msg} ({secs:.2}s)"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n} FAIL [{name}] {msg} ({secs:.2}s)");
            }
        }
    };
    let timed = |f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let r = f();
        (r, t.elapsed())
    };
    let (r, t) = timed(&mut c1_riemann_roch);
    run(1, "riemann-roch dimension", r, t);
    let (r, t) = timed(&mut c2_desk_check);
    run(2, "primitive quartic points", r, t);
    let (r, t) = timed(&mut || c3_density(&mut contractions));
    run(3, "density of the imprimitive locus", r, t);
    let (r, t) = timed(&mut || c4_locus_consistency(&mut contractions));
    run(4, "x^2 factors through the x-map", r, t);
    let (r, t) = timed(&mut || c5_oracle(&mut contractions));
    run(5, "contraction oracle equivalence", r, t);
    let (r, t) = timed(&mut || c6_dimension(&contractions));
    run(6, "dim P(D) > dim P(D')", r, t);
    let (r, t) = timed(&mut c7_engines);
    run(7, "primitivity engines agree", r, t);
    let (r, t) = timed(&mut c8_factorization);
    run(8, "factorization backbone", r, t);
    let (r, t) = timed(&mut c9_find_function);
    run(9, "find_primitive_function", r, t);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
