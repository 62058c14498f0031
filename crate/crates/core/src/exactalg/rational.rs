//! Exact rationals.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. This module adds the string
//! format used by every JSON surface (`"-3/2"`, `"7"`) and a few integer
//! helpers the rest of the crate leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `"p/q"` or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"`, with an optional sign. Accepts the Unicode minus
/// sign as well as ASCII `-`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned: String = text
        .trim()
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .filter(|c| !c.is_whitespace())
        .collect();
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n, d),
        None => (cleaned.as_str(), "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| crate::Error::InvalidInput(format!("bad rational {text:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| crate::Error::InvalidInput(format!("bad rational {text:?}")))?;
    if d.is_zero() {
        return invalid(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(n, d))
}

/// Height `max(|p|, q)` of `p/q` in lowest terms.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// Exact square root of a nonnegative rational, if it is a square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(r.numer())?;
    let d = int_sqrt_exact(r.denom())?;
    Some(Rational::new(n, d))
}

fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Splits a nonzero rational `r` as `s^2 * k` with `k` an integer whose
/// square factors below the trial bound have been removed. Used to present
/// quadratic subfields as `Q(sqrt(k))`.
pub fn square_free_kernel(r: &Rational) -> (Rational, BigInt) {
    // r = n/d = (n*d)/d^2
    let mut k: BigInt = r.numer() * r.denom();
    let mut s = Rational::new(BigInt::one(), r.denom().clone());
    let mut p = BigInt::from(2);
    let bound = BigInt::from(100_000);
    while &p * &p <= k.abs() && p < bound {
        let sq = &p * &p;
        while k.is_multiple_of(&sq) {
            k /= &sq;
            s *= Rational::from_integer(p.clone());
        }
        p += 1;
    }
    if let Some(root) = int_sqrt_exact(&k.abs()) {
        if root > BigInt::one() {
            k /= &root * &root;
            s *= Rational::from_integer(root);
        }
    }
    (s, k)
}

pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub mod serde_rational_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}
