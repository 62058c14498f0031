//! How often a random element of `L(D)` lies in the degree-deficient locus
//! or factors through a contraction of `D`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::with_jobs;
use crate::contract::{LocusTester, LocusVerdict};
use crate::error::{Error, Result};
use crate::exactalg::rational::{serde_rational, Rational};
use crate::hypcurve::{Divisor, HyperellipticCurve};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SampleMode {
    /// Every vector of `[-H, H]^n` except zero, once each.
    Exhaustive,
    /// `count` uniform draws from `[-H, H]^n`; zero draws are discarded.
    Seeded { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
struct Tally {
    degree_deficient: u64,
    imprimitive: u64,
    primitive: u64,
}

impl Tally {
    fn of(v: &LocusVerdict) -> Self {
        let mut t = Tally::default();
        match v {
            LocusVerdict::DegreeDeficient => t.degree_deficient = 1,
            LocusVerdict::Imprimitive { .. } => t.imprimitive = 1,
            LocusVerdict::NoFactorization => t.primitive = 1,
        }
        t
    }

    fn add(self, o: Self) -> Self {
        Tally {
            degree_deficient: self.degree_deficient + o.degree_deficient,
            imprimitive: self.imprimitive + o.imprimitive,
            primitive: self.primitive + o.primitive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub divisor: Divisor,
    pub coeff_height: u32,
    #[serde(flatten)]
    pub mode: SampleMode,
    /// Nonzero vectors classified.
    pub total: u64,
    pub degree_deficient: u64,
    pub imprimitive: u64,
    pub primitive: u64,
    #[serde(with = "serde_rational")]
    pub degree_deficient_fraction: Rational,
    #[serde(with = "serde_rational")]
    pub imprimitive_fraction: Rational,
    #[serde(with = "serde_rational")]
    pub primitive_fraction: Rational,
    /// Imprimitive share among vectors of full degree.
    #[serde(with = "serde_rational")]
    pub imprimitive_among_full_degree: Rational,
}

fn ratio(a: u64, b: u64) -> Rational {
    if b == 0 {
        Rational::from_integer(0.into())
    } else {
        Rational::new(a.into(), b.into())
    }
}

fn vector_at(mut index: u64, dim: usize, h: i64) -> Vec<Rational> {
    let base = (2 * h + 1) as u64;
    (0..dim)
        .map(|_| {
            let digit = (index % base) as i64 - h;
            index /= base;
            Rational::from_integer(digit.into())
        })
        .collect()
}

/// Classifies coefficient vectors over the basis of `L(D)`: degree below
/// `deg D`, factoring through a contraction of `D`, or neither.
pub fn density_experiment(
    curve: &HyperellipticCurve,
    d: &Divisor,
    coeff_height: u32,
    mode: SampleMode,
    jobs: Option<usize>,
) -> Result<DensityReport> {
    let twice_genus = 2 * curve.genus();
    if d.degree() <= twice_genus as i64 {
        return Err(Error::OutOfTheoremRange { degree: d.degree().max(0) as usize, twice_genus });
    }
    let tester = LocusTester::for_divisor(curve, d)?;
    let dim = tester.basis().len();
    let h = coeff_height as i64;
    let classify = |v: &[Rational]| -> Result<Tally> {
        if v.iter().all(|c| c == &Rational::from_integer(0.into())) {
            return Ok(Tally::default());
        }
        tester.classify_coordinates(v).map(|r| Tally::of(&r))
    };
    let tally = with_jobs(jobs, || -> Result<Tally> {
        match mode {
            SampleMode::Exhaustive => {
                let n = ((2 * h + 1) as u64)
                    .checked_pow(dim as u32)
                    .ok_or_else(|| Error::PreconditionFailed("coefficient box too large".into()))?;
                (0..n)
                    .into_par_iter()
                    .map(|i| classify(&vector_at(i, dim, h)))
                    .try_reduce(Tally::default, |a, b| Ok(a.add(b)))
            }
            SampleMode::Seeded { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let draws: Vec<Vec<Rational>> = (0..count)
                    .map(|_| (0..dim).map(|_| Rational::from_integer(rng.gen_range(-h..=h).into())).collect())
                    .collect();
                draws
                    .par_iter()
                    .map(|v| classify(v))
                    .try_reduce(Tally::default, |a, b| Ok(a.add(b)))
            }
        }
    })??;
    let total = tally.degree_deficient + tally.imprimitive + tally.primitive;
    Ok(DensityReport {
        divisor: d.clone(),
        coeff_height,
        mode,
        total,
        degree_deficient: tally.degree_deficient,
        imprimitive: tally.imprimitive,
        primitive: tally.primitive,
        degree_deficient_fraction: ratio(tally.degree_deficient, total),
        imprimitive_fraction: ratio(tally.imprimitive, total),
        primitive_fraction: ratio(tally.primitive, total),
        imprimitive_among_full_degree: ratio(tally.imprimitive, tally.imprimitive + tally.primitive),
    })
}
