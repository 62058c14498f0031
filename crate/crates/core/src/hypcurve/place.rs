use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::curve::HyperellipticCurve;
use crate::error::{invalid, Result};
use crate::exactalg::factor::is_irreducible;
use crate::exactalg::poly::{poly_inv_mod, RatPolynomial};
use crate::exactalg::rational::{format_rational, rational_sqrt, Rational};
use crate::numfield::field::{NfPolynomial, NumberField};
use crate::numfield::trager::trager_factor;

/// How a closed point of the x-line behaves in the double cover.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceKind {
    /// `v^2 = h mod u`, `deg v < deg u`.
    Split { v: RatPolynomial },
    Ramified,
    Inert,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinity,
    Affine { u: RatPolynomial, kind: PlaceKind },
}

impl Place {
    pub fn degree(&self) -> usize {
        match self {
            Place::Infinity => 1,
            Place::Affine { u, kind: PlaceKind::Inert } => 2 * u.deg(),
            Place::Affine { u, .. } => u.deg(),
        }
    }

    /// Ramification index over the x-line.
    pub fn ramification(&self) -> i64 {
        match self {
            Place::Infinity | Place::Affine { kind: PlaceKind::Ramified, .. } => 2,
            _ => 1,
        }
    }

    pub fn u(&self) -> Option<&RatPolynomial> {
        match self {
            Place::Infinity => None,
            Place::Affine { u, .. } => Some(u),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    /// The image under the hyperelliptic involution `y -> -y`.
    pub fn conjugate(&self) -> Place {
        match self {
            Place::Affine { u, kind: PlaceKind::Split { v } } => Place::Affine {
                u: u.clone(),
                kind: PlaceKind::Split { v: -v },
            },
            p => p.clone(),
        }
    }

    /// Rational coordinates of a degree-one place, `None` at infinity.
    pub fn rational_point(&self) -> Option<(Rational, Rational)> {
        match self {
            Place::Affine { u, kind } if u.deg() == 1 => {
                let x = -u.coeff(0);
                match kind {
                    PlaceKind::Split { v } => Some((x, v.coeff(0))),
                    PlaceKind::Ramified => Some((x, Rational::zero())),
                    PlaceKind::Inert => None,
                }
            }
            _ => None,
        }
    }

    /// Checks the defining congruences against `curve`.
    pub fn validate(&self, curve: &HyperellipticCurve) -> Result<()> {
        let Place::Affine { u, kind } = self else { return Ok(()) };
        if !u.is_monic() || !is_irreducible(u) {
            return invalid(format!("u = {u} must be monic irreducible"));
        }
        let ok = match kind {
            PlaceKind::Ramified => u.divides(curve.h()),
            PlaceKind::Split { v } => {
                v.degree().map_or(true, |dv| dv < u.deg())
                    && (&(v * v) - curve.h()).rem(u).is_zero()
                    && !u.divides(curve.h())
            }
            PlaceKind::Inert => {
                places_over_x(curve, u)?.iter().any(|p| p == self)
            }
        };
        if ok {
            Ok(())
        } else {
            invalid(format!("{self} is not a place of y^2 = {}", curve.h()))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Affine { u, kind: PlaceKind::Split { v } } => {
                write!(f, "place(u={},v={})", compact(u), compact(v))
            }
            Place::Affine { u, .. } => write!(f, "place(u={})", compact(u)),
        }
    }
}

fn compact(p: &RatPolynomial) -> String {
    if p.is_constant() {
        return format_rational(&p.coeff(0));
    }
    p.to_string().replace(' ', "")
}

/// The places above the closed point `u = 0` of the x-line.
pub fn places_over_x(curve: &HyperellipticCurve, u: &RatPolynomial) -> Result<Vec<Place>> {
    if u.deg() == 0 || !is_irreducible(u) {
        return invalid(format!("u = {u} must be irreducible of positive degree"));
    }
    let u = u.monic();
    let h = curve.h();
    if u.divides(h) {
        return Ok(vec![Place::Affine { u, kind: PlaceKind::Ramified }]);
    }
    let split = |v: RatPolynomial| {
        let w = (-&v).rem(&u);
        vec![
            Place::Affine { u: u.clone(), kind: PlaceKind::Split { v } },
            Place::Affine { u: u.clone(), kind: PlaceKind::Split { v: w } },
        ]
    };
    if u.deg() == 1 {
        let c = -u.coeff(0);
        return Ok(match rational_sqrt(&h.eval(&c)) {
            Some(r) => split(RatPolynomial::constant(r.abs())),
            None => vec![Place::Affine { u, kind: PlaceKind::Inert }],
        });
    }
    let k = NumberField::new_unchecked(u.clone());
    let hbar = k.from_poly(h.clone());
    let y2 = NfPolynomial::new(&k, vec![hbar.neg(), k.zero(), k.one()])?;
    let fl = trager_factor(&y2)?;
    if fl.factors.len() == 1 && fl.factors[0].1 == 1 {
        return Ok(vec![Place::Affine { u, kind: PlaceKind::Inert }]);
    }
    let v = fl.factors[0].0.coeff(0).neg().rep().clone();
    Ok(split(v))
}

/// `y_k` with `y_k^2 = h mod u^k` and `y_k = v mod u`, by Newton iteration.
pub(crate) fn lift_sqrt(h: &RatPolynomial, u: &RatPolynomial, v: &RatPolynomial, k: u32) -> RatPolynomial {
    let mut y = v.clone();
    let mut prec = 1u32;
    while prec < k {
        prec = (2 * prec).min(k);
        let modulus = u.pow(prec);
        let err = (&(&y * &y) - h).rem(&modulus);
        let inv = poly_inv_mod(&y.scale(&Rational::from_integer(2.into())), &modulus)
            .expect("y is a unit above a split place");
        y = (&y - &(&err * &inv)).rem(&modulus);
    }
    y.rem(&u.pow(k))
}

/// A finite formal sum of places.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    entries: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn from_place(p: Place, m: i64) -> Self {
        let mut d = Divisor::zero();
        d.add_place(p, m);
        d
    }

    pub fn infinity(m: i64) -> Self {
        Divisor::from_place(Place::Infinity, m)
    }

    pub fn add_place(&mut self, p: Place, m: i64) {
        let e = self.entries.entry(p).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.retain(|_, m| *m != 0);
        }
    }

    pub fn mult(&self, p: &Place) -> i64 {
        self.entries.get(p).copied().unwrap_or(0)
    }

    pub fn infinity_mult(&self) -> i64 {
        self.mult(&Place::Infinity)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, i64)> {
        self.entries.iter().map(|(p, m)| (p, *m))
    }

    pub fn support(&self) -> Vec<Place> {
        self.entries.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.iter().map(|(p, m)| m * p.degree() as i64).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|m| *m > 0)
    }

    pub fn is_multiplicity_one(&self) -> bool {
        self.entries.values().all(|m| *m == 1)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Divisor::zero();
        }
        Divisor { entries: self.entries.iter().map(|(p, m)| (p.clone(), m * k)).collect() }
    }

    pub fn positive_part(&self) -> Self {
        Divisor {
            entries: self.entries.iter().filter(|(_, m)| **m > 0).map(|(p, m)| (p.clone(), *m)).collect(),
        }
    }

    pub fn negative_part(&self) -> Self {
        Divisor {
            entries: self.entries.iter().filter(|(_, m)| **m < 0).map(|(p, m)| (p.clone(), -*m)).collect(),
        }
    }

    /// `self <= other` coefficientwise.
    pub fn le(&self, other: &Divisor) -> bool {
        (other - self).is_effective()
    }

    pub fn disjoint(&self, other: &Divisor) -> bool {
        self.entries.keys().all(|p| !other.entries.contains_key(p))
    }

    pub fn validate(&self, curve: &HyperellipticCurve) -> Result<()> {
        self.entries.keys().try_for_each(|p| p.validate(curve))
    }
}

impl std::ops::Add for &Divisor {
    type Output = Divisor;
    fn add(self, o: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (p, m) in o.iter() {
            d.add_place(p.clone(), m);
        }
        d
    }
}

impl std::ops::Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, o: &Divisor) -> Divisor {
        self + &o.scale(-1)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            let sep = match (i, m < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => "+",
                (_, true) => "-",
            };
            match m.abs() {
                1 => write!(f, "{sep}{p}")?,
                k => write!(f, "{sep}{k}*{p}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryWire {
    Infinity { infinity: i64 },
    Affine { u: RatPolynomial, v: Option<RatPolynomial>, kind: KindWire, mult: i64 },
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq)]
#[serde(rename_all = "lowercase")]
enum KindWire {
    Split,
    Ramified,
    Inert,
}

impl Serialize for Divisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<EntryWire> = self
            .iter()
            .map(|(p, m)| match p {
                Place::Infinity => EntryWire::Infinity { infinity: m },
                Place::Affine { u, kind } => {
                    let (kind, v) = match kind {
                        PlaceKind::Split { v } => (KindWire::Split, Some(v.clone())),
                        PlaceKind::Ramified => (KindWire::Ramified, None),
                        PlaceKind::Inert => (KindWire::Inert, None),
                    };
                    EntryWire::Affine { u: u.clone(), v, kind, mult: m }
                }
            })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Divisor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = Vec::<EntryWire>::deserialize(d)?;
        let mut out = Divisor::zero();
        for e in wire {
            match e {
                EntryWire::Infinity { infinity } => out.add_place(Place::Infinity, infinity),
                EntryWire::Affine { u, v, kind, mult } => {
                    let kind = match (kind, v) {
                        (KindWire::Split, Some(v)) => PlaceKind::Split { v },
                        (KindWire::Ramified, None) => PlaceKind::Ramified,
                        (KindWire::Inert, None) => PlaceKind::Inert,
                        _ => return Err(D::Error::custom("v must be present exactly for split places")),
                    };
                    out.add_place(Place::Affine { u, kind }, mult);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn curve() -> HyperellipticCurve {
        HyperellipticCurve::new(RatPolynomial::from_ints(&[1, 0, 0, 1])).unwrap()
    }

    #[test]
    fn fibers_on_x3_plus_1() {
        let c = curve();
        let p = places_over_x(&c, &RatPolynomial::from_ints(&[-2, 1])).unwrap();
        assert_eq!(p.len(), 2);
        let vs: Vec<_> = p.iter().map(|q| q.rational_point().unwrap().1).collect();
        assert_eq!(vs, vec![int(3), int(-3)]);
        let r = places_over_x(&c, &RatPolynomial::from_ints(&[1, 1])).unwrap();
        assert_eq!(r, vec![Place::Affine { u: RatPolynomial::from_ints(&[1, 1]), kind: PlaceKind::Ramified }]);
        let i = places_over_x(&c, &RatPolynomial::from_ints(&[2, 1])).unwrap();
        assert_eq!(i.len(), 1);
        assert_eq!(i[0].degree(), 2);
        assert!(places_over_x(&c, &RatPolynomial::from_ints(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn higher_degree_places() {
        let c = curve();
        // x^2 - x + 1 divides h: ramified
        let r = places_over_x(&c, &RatPolynomial::from_ints(&[1, -1, 1])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].degree(), 2);
        // u = x^2 - 2: h = 2x + 1 mod u, whose norm -7 is not a square
        let u = RatPolynomial::from_ints(&[-2, 0, 1]);
        let ps = places_over_x(&c, &u).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].degree(), 4);
        ps[0].validate(&c).unwrap();
    }

    #[test]
    fn split_place_of_higher_degree() {
        // y^2 = x^3 + 1 and the point x = theta with theta^3 = 8: y^2 = 9
        let c = curve();
        let u = RatPolynomial::from_ints(&[4, 2, 1]); // x^3 - 8 = (x - 2)(x^2 + 2x + 4)
        let ps = places_over_x(&c, &u).unwrap();
        assert_eq!(ps.len(), 2);
        for p in &ps {
            p.validate(&c).unwrap();
        }
        assert_eq!(ps[0].conjugate(), ps[1]);
    }

    #[test]
    fn hensel_square_root() {
        let h = RatPolynomial::from_ints(&[1, 0, 0, 1]);
        let u = RatPolynomial::from_ints(&[-2, 1]);
        let y = lift_sqrt(&h, &u, &RatPolynomial::constant(int(3)), 7);
        assert!((&(&y * &y) - &h).rem(&u.pow(7)).is_zero());
    }

    #[test]
    fn divisor_algebra_and_json() {
        let c = curve();
        let p = places_over_x(&c, &RatPolynomial::from_ints(&[-2, 1])).unwrap();
        let d = &(&Divisor::from_place(p[0].clone(), 1) + &Divisor::from_place(p[1].clone(), 1))
            - &Divisor::infinity(2);
        assert_eq!(d.degree(), 0);
        assert!(!d.is_effective());
        assert_eq!(d.positive_part().degree(), 2);
        let s = serde_json::to_string(&d).unwrap();
        let back: Divisor = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        back.validate(&c).unwrap();
        assert_eq!(d.to_string(), "-2*inf+place(u=x-2,v=-3)+place(u=x-2,v=3)");
    }
}
