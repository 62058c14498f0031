//! Deciding whether a function of degree `deg D` factors through a
//! contraction of `D`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::enumerate::enumerate_contr0;
use super::span::{factors_through, pullback_basis, span_coordinates};
use super::types::{Contraction, ContractionSet, TargetPoint};
use crate::error::{Error, Result};
use crate::exactalg::linalg::{solve, Subspace};
use crate::exactalg::rational::Rational;
use crate::hypcurve::{
    expansion_at_infinity, function_degree, function_space, pole_divisor, CurveFunction, Divisor,
    HyperellipticCurve, Place,
};

/// Outcome of the imprimitive-locus test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LocusVerdict {
    /// Constant, or of degree below `deg D`.
    DegreeDeficient,
    /// `f = phi(g)` for the given contraction.
    Imprimitive { via: Contraction },
    NoFactorization,
}

impl LocusVerdict {
    pub fn is_imprimitive(&self) -> bool {
        matches!(self, LocusVerdict::Imprimitive { .. })
    }
}

/// Contractions of `D` together with the data needed to test many
/// functions of `L(D)` quickly.
#[derive(Debug)]
pub struct LocusTester {
    curve: HyperellipticCurve,
    contractions: ContractionSet,
    basis: Vec<CurveFunction>,
    /// Pole order at infinity of each basis element, when `D = n * inf`.
    pole_orders: Option<Vec<i64>>,
    /// `g^* H^0(O(D'))` in basis coordinates, one per contraction.
    pullbacks: Vec<Subspace>,
}

type Cache = RwLock<HashMap<(HyperellipticCurve, Divisor), Arc<LocusTester>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl LocusTester {
    /// The tester for `(curve, d)`, built once and shared.
    pub fn for_divisor(curve: &HyperellipticCurve, d: &Divisor) -> Result<Arc<LocusTester>> {
        let key = (curve.clone(), d.clone());
        if let Some(t) = cache().read().expect("cache lock").get(&key) {
            return Ok(Arc::clone(t));
        }
        let built = Arc::new(Self::build(curve, d)?);
        let mut w = cache().write().expect("cache lock");
        Ok(Arc::clone(w.entry(key).or_insert(built)))
    }

    fn build(curve: &HyperellipticCurve, d: &Divisor) -> Result<LocusTester> {
        let contractions = enumerate_contr0(curve, d)?;
        let basis = function_space(curve, d)?;
        let pole_orders = if d.support() == vec![Place::Infinity] {
            let orders = basis
                .iter()
                .map(|b| Ok(pole_divisor(curve, b)?.infinity_mult()))
                .collect::<Result<Vec<i64>>>()?;
            Some(orders)
        } else {
            None
        };
        let mut pullbacks = Vec::with_capacity(contractions.contractions.len());
        for c in &contractions.contractions {
            let coords = pullback_basis(curve, c)?
                .iter()
                .map(|p| {
                    span_coordinates(&basis, p)
                        .ok_or_else(|| Error::PreconditionFailed(format!("pullback of {} escapes L(D)", c.g)))
                })
                .collect::<Result<Vec<_>>>()?;
            pullbacks.push(Subspace::spanned_by(&coords));
        }
        Ok(LocusTester { curve: curve.clone(), contractions, basis, pole_orders, pullbacks })
    }

    pub fn contractions(&self) -> &ContractionSet {
        &self.contractions
    }

    pub fn basis(&self) -> &[CurveFunction] {
        &self.basis
    }

    fn divisor(&self) -> &Divisor {
        &self.contractions.divisor
    }

    /// The function with the given coordinates in [`Self::basis`].
    pub fn combine(&self, coords: &[Rational]) -> CurveFunction {
        self.basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .fold(CurveFunction::zero(), |acc, (b, c)| acc.add(&b.scale(c)))
    }

    fn degree_of_coordinates(&self, coords: &[Rational], f: &CurveFunction) -> Result<i64> {
        if let Some(orders) = &self.pole_orders {
            return Ok(orders
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(o, _)| *o)
                .max()
                .unwrap_or(0));
        }
        if f.is_constant() {
            return Ok(0);
        }
        Ok(function_degree(&self.curve, f)? as i64)
    }

    /// Classifies the element of `L(D)` with the given basis coordinates.
    pub fn classify_coordinates(&self, coords: &[Rational]) -> Result<LocusVerdict> {
        if coords.len() != self.basis.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates, got {}",
                self.basis.len(),
                coords.len()
            )));
        }
        let f = self.combine(coords);
        if f.is_constant() || self.degree_of_coordinates(coords, &f)? < self.divisor().degree() {
            return Ok(LocusVerdict::DegreeDeficient);
        }
        for (c, sub) in self.contractions.contractions.iter().zip(&self.pullbacks) {
            if sub.contains(coords) {
                return Ok(LocusVerdict::Imprimitive { via: c.clone() });
            }
        }
        self.classify_families(&f)
    }

    /// Classifies an arbitrary nonconstant function against `Contr0(D)`.
    pub fn classify(&self, f: &CurveFunction) -> Result<LocusVerdict> {
        if f.is_constant() {
            return Ok(LocusVerdict::DegreeDeficient);
        }
        if let Some(coords) = span_coordinates(&self.basis, f) {
            return self.classify_coordinates(&coords);
        }
        let deg = function_degree(&self.curve, f)? as i64;
        let n = self.divisor().degree();
        if deg < n {
            return Ok(LocusVerdict::DegreeDeficient);
        }
        if deg > n {
            return Err(Error::PreconditionFailed(format!("{f} has degree {deg} > deg D = {n}")));
        }
        for c in &self.contractions.contractions {
            if factors_through(&self.curve, f, c)? {
                return Ok(LocusVerdict::Imprimitive { via: c.clone() });
            }
        }
        self.classify_families(f)
    }

    /// `D = n * inf` with a positive-dimensional family of degree-`e`
    /// maps: the candidate inner map is read off the `m`-th root of the
    /// expansion of `f` at infinity, `m = n / e`, then checked exactly.
    fn classify_families(&self, f: &CurveFunction) -> Result<LocusVerdict> {
        let n = self.divisor().degree();
        if self.contractions.infinity_families.is_empty() {
            return Ok(LocusVerdict::NoFactorization);
        }
        if pole_divisor(&self.curve, f)? != Divisor::infinity(n) {
            return Ok(LocusVerdict::NoFactorization);
        }
        for &e in &self.contractions.infinity_families {
            let m = (n as usize / e) as u32;
            if let Some(c) = approximate_root(&self.curve, f, n, e, m)? {
                return Ok(LocusVerdict::Imprimitive { via: c });
            }
        }
        Ok(LocusVerdict::NoFactorization)
    }
}

fn approximate_root(
    curve: &HyperellipticCurve,
    f: &CurveFunction,
    n: i64,
    e: usize,
    m: u32,
) -> Result<Option<Contraction>> {
    let s = expansion_at_infinity(curve, f, n + 2);
    let lc = s.leading_coeff().expect("f has a pole");
    let Some(r) = s.scale(&lc.recip()).root(m) else {
        return Ok(None);
    };
    let space = function_space(curve, &Divisor::infinity(e as i64))?;
    let nonconst: Vec<&CurveFunction> = space.iter().filter(|b| !b.is_constant()).collect();
    let exps: Vec<Vec<Rational>> = nonconst
        .iter()
        .map(|b| {
            let sb = expansion_at_infinity(curve, b, e as i64 + 2);
            (1..=e as i64).map(|k| sb.coeff(-k)).collect()
        })
        .collect();
    let rows: Vec<Vec<Rational>> = (0..e).map(|k| exps.iter().map(|v| v[k].clone()).collect()).collect();
    let rhs: Vec<Rational> = (1..=e as i64).map(|k| r.coeff(-k)).collect();
    let Some(cs) = solve(&rows, &rhs) else {
        return Ok(None);
    };
    let g = nonconst
        .iter()
        .zip(&cs)
        .fold(CurveFunction::zero(), |acc, (b, c)| acc.add(&b.scale(c)));
    let mut powers = vec![CurveFunction::constant(Rational::one())];
    for _ in 0..m {
        let next = powers.last().expect("nonempty").mul(&g, curve);
        powers.push(next);
    }
    if span_coordinates(&powers, f).is_none() {
        return Ok(None);
    }
    let pullback = Divisor::infinity(n);
    let pullback_verified = pole_divisor(curve, &g)?.scale(m as i64) == pullback;
    Ok(Some(Contraction {
        g,
        e,
        target_divisor: vec![(TargetPoint::Infinity, m as i64)],
        pullback,
        pullback_verified,
    }))
}

/// Tests `f` against the contractions of `d`. The contraction set is built
/// once per `(curve, d)` and cached.
pub fn imprimitive_locus_test(
    curve: &HyperellipticCurve,
    d: &Divisor,
    f: &CurveFunction,
) -> Result<LocusVerdict> {
    LocusTester::for_divisor(curve, d)?.classify(f)
}
