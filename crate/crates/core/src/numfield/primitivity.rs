//! Primitivity certificates: does `Q[x]/(m)` have a field strictly between
//! `Q` and itself?

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::{FieldElement, NumberField};
use super::subfields::principal_subfields_seeded;
use crate::error::{invalid, Error, Result};
use crate::exactalg::factor::{factor_over_rationals, is_irreducible};
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::rational::{format_rational, height, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Primitive,
    Imprimitive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertMethod {
    PrimeDegree,
    PrincipalSubfields,
    ResolventCubic,
    /// Primitivity of a function field inferred from one irreducible,
    /// primitive specialization.
    GenericFromSpecialization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Policy {
    #[default]
    Auto,
    ForceGeneral,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubfieldWitness {
    pub degree: usize,
    pub generator: FieldElement,
    pub generator_minpoly: RatPolynomial,
}

impl SubfieldWitness {
    /// Standalone check against the ambient field.
    pub fn verify(&self) -> bool {
        let d = self.generator.field().degree();
        let e = self.degree;
        e > 1
            && e < d
            && d % e == 0
            && self.generator_minpoly.deg() == e
            && self.generator_minpoly.is_monic()
            && self.generator.as_rational().is_none()
            && self.generator.eval_poly(&self.generator_minpoly).is_zero()
            && is_irreducible(&self.generator_minpoly)
    }
}

/// The fiber that certified a generic verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecializationEvidence {
    pub t: Rational,
    pub fiber: PrimitivityCertificate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimitivityCertificate {
    pub verdict: Verdict,
    pub method: CertMethod,
    pub witness: Option<SubfieldWitness>,
    pub modulus: RatPolynomial,
    /// Norm shift used when factoring the modulus over its own field.
    pub trager_shift: Option<i64>,
    pub specialization: Option<Box<SpecializationEvidence>>,
}

impl PrimitivityCertificate {
    pub fn is_primitive(&self) -> bool {
        self.verdict == Verdict::Primitive
    }

    /// Certificate for a function field, backed by one fiber.
    pub fn from_specialization(t: Rational, fiber: PrimitivityCertificate) -> Self {
        PrimitivityCertificate {
            verdict: Verdict::Primitive,
            method: CertMethod::GenericFromSpecialization,
            witness: None,
            modulus: fiber.modulus.clone(),
            trager_shift: None,
            specialization: Some(Box::new(SpecializationEvidence { t, fiber })),
        }
    }

    /// Re-derives the verdict by the recorded method and checks the witness.
    pub fn verify(&self) -> bool {
        if (self.verdict == Verdict::Imprimitive) != self.witness.is_some() {
            return false;
        }
        if let Some(w) = &self.witness {
            if w.generator.field().modulus() != &self.modulus || !w.verify() {
                return false;
            }
        }
        if !is_irreducible(&self.modulus) || !self.modulus.is_monic() {
            return false;
        }
        let d = self.modulus.deg();
        match self.method {
            CertMethod::PrimeDegree => self.verdict == Verdict::Primitive && is_prime(d),
            CertMethod::ResolventCubic => match resolvent_cubic(&self.modulus) {
                Ok(c) => has_rational_root(&c) == (self.verdict == Verdict::Imprimitive),
                Err(_) => false,
            },
            CertMethod::PrincipalSubfields => {
                if self.verdict == Verdict::Imprimitive {
                    return true;
                }
                let k = NumberField::new_unchecked(self.modulus.clone());
                let (subs, _) = principal_subfields_seeded(&k, 0);
                subs.iter().all(|s| s.degree == 1 || s.degree == d)
            }
            CertMethod::GenericFromSpecialization => match &self.specialization {
                Some(ev) => {
                    self.verdict == Verdict::Primitive
                        && ev.fiber.verdict == Verdict::Primitive
                        && ev.fiber.method != CertMethod::GenericFromSpecialization
                        && ev.fiber.modulus == self.modulus
                        && ev.fiber.verify()
                }
                None => false,
            },
        }
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| n % p != 0)
}

fn has_rational_root(p: &RatPolynomial) -> bool {
    factor_over_rationals(p)
        .map(|fl| fl.factors.iter().any(|(f, _)| f.deg() == 1))
        .unwrap_or(false)
}

/// `z^3 - q z^2 + (pr - 4s) z - (p^2 s - 4qs + r^2)` for the monic quartic
/// `x^4 + p x^3 + q x^2 + r x + s`.
pub fn resolvent_cubic(quartic: &RatPolynomial) -> Result<RatPolynomial> {
    if quartic.degree() != Some(4) || !quartic.is_monic() {
        return invalid("resolvent cubic needs a monic quartic");
    }
    let p = quartic.coeff(3);
    let q = quartic.coeff(2);
    let r = quartic.coeff(1);
    let s = quartic.coeff(0);
    let four = Rational::from_integer(4.into());
    let c1 = &p * &r - &four * &s;
    let c0 = -(&p * &p * &s - &four * &q * &s + &r * &r);
    Ok(RatPolynomial::new(vec![c0, c1, -q, Rational::from_integer(1.into())]))
}

/// Decides whether `Q[x]/(m)` is primitive and returns a checkable
/// certificate. Non-monic `m` is made monic first.
pub fn is_primitive_field(m: &RatPolynomial, policy: Policy) -> Result<PrimitivityCertificate> {
    if m.is_zero() || m.deg() == 0 {
        return invalid("field modulus must have positive degree");
    }
    let m = m.monic();
    let k = NumberField::new(m.clone())?;
    let d = k.degree();
    let base = |verdict, method| PrimitivityCertificate {
        verdict,
        method,
        witness: None,
        modulus: m.clone(),
        trager_shift: None,
        specialization: None,
    };
    if policy == Policy::Auto && is_prime(d) {
        return Ok(base(Verdict::Primitive, CertMethod::PrimeDegree));
    }
    if policy == Policy::Auto && d == 4 {
        let cubic = resolvent_cubic(&m)?;
        if !has_rational_root(&cubic) {
            return Ok(base(Verdict::Primitive, CertMethod::ResolventCubic));
        }
        let mut cert = general(&k)?;
        if cert.verdict != Verdict::Imprimitive {
            return Err(Error::PreconditionFailed(
                "resolvent cubic and principal subfields disagree".into(),
            ));
        }
        cert.method = CertMethod::ResolventCubic;
        return Ok(cert);
    }
    general(&k)
}

fn general(k: &NumberField) -> Result<PrimitivityCertificate> {
    let d = k.degree();
    let (subs, shift) = principal_subfields_seeded(k, 0);
    let witness = subs
        .iter()
        .filter(|s| s.degree > 1 && s.degree < d)
        .min_by_key(|s| {
            let h = s.generator_minpoly.coeffs().iter().map(height).max();
            (s.degree, h, s.generator_minpoly.clone())
        })
        .map(|s| SubfieldWitness {
            degree: s.degree,
            generator: s.generator.clone(),
            generator_minpoly: s.generator_minpoly.clone(),
        });
    Ok(PrimitivityCertificate {
        verdict: if witness.is_some() { Verdict::Imprimitive } else { Verdict::Primitive },
        method: CertMethod::PrincipalSubfields,
        witness,
        modulus: k.modulus().clone(),
        trager_shift: Some(shift),
        specialization: None,
    })
}

// JSON shape

#[derive(Serialize, Deserialize)]
struct WitnessWire {
    degree: usize,
    generator_coeffs: Vec<String>,
    minpoly: RatPolynomial,
}

#[derive(Serialize, Deserialize)]
struct SpecializationWire {
    t: String,
    fiber: CertificateWire,
}

#[derive(Serialize, Deserialize)]
struct CertificateWire {
    verdict: Verdict,
    method: CertMethod,
    witness: Option<WitnessWire>,
    modulus: RatPolynomial,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trager_shift: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    specialization: Option<Box<SpecializationWire>>,
}

impl From<&PrimitivityCertificate> for CertificateWire {
    fn from(c: &PrimitivityCertificate) -> Self {
        CertificateWire {
            verdict: c.verdict,
            method: c.method,
            witness: c.witness.as_ref().map(|w| WitnessWire {
                degree: w.degree,
                generator_coeffs: w.generator.coeffs().iter().map(format_rational).collect(),
                minpoly: w.generator_minpoly.clone(),
            }),
            modulus: c.modulus.clone(),
            trager_shift: c.trager_shift,
            specialization: c.specialization.as_ref().map(|s| {
                Box::new(SpecializationWire { t: format_rational(&s.t), fiber: (&s.fiber).into() })
            }),
        }
    }
}

impl TryFrom<CertificateWire> for PrimitivityCertificate {
    type Error = Error;
    fn try_from(w: CertificateWire) -> Result<Self> {
        if !w.modulus.is_monic() || w.modulus.deg() == 0 {
            return invalid("certificate modulus must be monic of positive degree");
        }
        let witness = match w.witness {
            None => None,
            Some(ww) => {
                let k = NumberField::new_unchecked(w.modulus.clone());
                let coeffs = ww
                    .generator_coeffs
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                Some(SubfieldWitness {
                    degree: ww.degree,
                    generator: k.from_coeffs(coeffs)?,
                    generator_minpoly: ww.minpoly,
                })
            }
        };
        let specialization = match w.specialization {
            None => None,
            Some(s) => Some(Box::new(SpecializationEvidence {
                t: parse_rational(&s.t)?,
                fiber: s.fiber.try_into()?,
            })),
        };
        Ok(PrimitivityCertificate {
            verdict: w.verdict,
            method: w.method,
            witness,
            modulus: w.modulus,
            trager_shift: w.trager_shift,
            specialization,
        })
    }
}

impl Serialize for PrimitivityCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PrimitivityCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CertificateWire::deserialize(d)?;
        w.try_into().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;
    use num_traits::Zero;

    fn poly(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_ints(c)
    }

    #[test]
    fn resolvent_examples() {
        assert_eq!(resolvent_cubic(&poly(&[1, 0, -10, 0, 1])).unwrap(), poly(&[-40, -4, 10, 1]));
        assert_eq!(resolvent_cubic(&poly(&[1, 0, 0, 0, 1])).unwrap(), poly(&[0, -4, 0, 1]));
        let c = resolvent_cubic(&poly(&[3, 0, -4, -1, 1])).unwrap();
        assert_eq!(c, poly(&[-51, -12, 4, 1]));
        // no divisor of 51 is a root
        for r in [1, 3, 17, 51] {
            for sgn in [1, -1] {
                assert!(!c.eval(&int(sgn * r)).is_zero());
            }
        }
        assert!(resolvent_cubic(&poly(&[1, 0, 1])).is_err());
    }

    #[test]
    fn biquadratic_is_imprimitive() {
        let c = is_primitive_field(&poly(&[1, 0, -10, 0, 1]), Policy::Auto).unwrap();
        assert_eq!(c.verdict, Verdict::Imprimitive);
        assert_eq!(c.method, CertMethod::ResolventCubic);
        let w = c.witness.as_ref().unwrap();
        assert_eq!(w.degree, 2);
        assert_eq!(w.generator_minpoly, poly(&[-2, 0, 1]));
        assert!(c.verify());
        let g = is_primitive_field(&poly(&[1, 0, -10, 0, 1]), Policy::ForceGeneral).unwrap();
        assert_eq!(g.method, CertMethod::PrincipalSubfields);
        assert!(g.verify());
    }

    #[test]
    fn prime_and_s4_quartic_are_primitive() {
        let c = is_primitive_field(&poly(&[-2, 0, 0, 0, 0, 1]), Policy::Auto).unwrap();
        assert_eq!((c.verdict, c.method), (Verdict::Primitive, CertMethod::PrimeDegree));
        assert!(c.verify());
        let q = is_primitive_field(&poly(&[3, 0, -4, -1, 1]), Policy::Auto).unwrap();
        assert_eq!(q.verdict, Verdict::Primitive);
        let g = is_primitive_field(&poly(&[3, 0, -4, -1, 1]), Policy::ForceGeneral).unwrap();
        assert_eq!(g.verdict, Verdict::Primitive);
        assert!(g.verify());
    }

    #[test]
    fn reducible_is_not_a_field() {
        assert!(matches!(
            is_primitive_field(&poly(&[-1, 0, 1]), Policy::Auto),
            Err(Error::NotAField(_))
        ));
    }

    #[test]
    fn sextic_has_proper_subfield() {
        let c = is_primitive_field(&poly(&[-2, 0, 0, 0, 0, 0, 1]), Policy::Auto).unwrap();
        assert_eq!(c.verdict, Verdict::Imprimitive);
        assert_eq!(c.witness.as_ref().unwrap().degree, 2);
        assert!(c.verify());
    }

    #[test]
    fn json_roundtrip_and_tamper() {
        let c = is_primitive_field(&poly(&[1, 0, -10, 0, 1]), Policy::Auto).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["verdict"], "Imprimitive");
        assert_eq!(v["witness"]["degree"], 2);
        let back: PrimitivityCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        assert!(back.verify());
        let mut bad = back.clone();
        bad.witness.as_mut().unwrap().generator_minpoly = poly(&[-5, 0, 1]);
        assert!(!bad.verify());
        let mut flipped = c.clone();
        flipped.verdict = Verdict::Primitive;
        flipped.witness = None;
        assert!(!flipped.verify());
    }

    #[test]
    fn generic_from_specialization() {
        let fiber = is_primitive_field(&poly(&[3, 0, -4, -1, 1]), Policy::Auto).unwrap();
        let c = PrimitivityCertificate::from_specialization(int(2), fiber);
        assert!(c.verify());
        let s = serde_json::to_string(&c).unwrap();
        let back: PrimitivityCertificate = serde_json::from_str(&s).unwrap();
        assert!(back.verify());
    }
}
