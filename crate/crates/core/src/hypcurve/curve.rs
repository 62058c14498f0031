use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::poly::RatPolynomial;
use crate::exactalg::resultant::is_squarefree;

/// The smooth affine model `y^2 = h(x)` with `deg h = 2g + 1`, which has a
/// single rational point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperellipticCurve {
    h: RatPolynomial,
    genus: usize,
}

impl HyperellipticCurve {
    pub fn new(h: RatPolynomial) -> Result<Self> {
        let n = match h.degree() {
            Some(n) if n % 2 == 1 => n,
            Some(n) => {
                return Err(Error::UnsupportedModel(format!(
                    "deg h = {n} is even; only odd-degree models are handled"
                )))
            }
            None => return Err(Error::UnsupportedModel("h is zero".into())),
        };
        if !is_squarefree(&h) {
            return Err(Error::SingularModel(format!("h = {h} has a repeated root")));
        }
        Ok(HyperellipticCurve { h, genus: (n - 1) / 2 })
    }

    pub fn h(&self) -> &RatPolynomial {
        &self.h
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Pole order of `y` at infinity.
    pub fn y_pole_order(&self) -> i64 {
        2 * self.genus as i64 + 1
    }
}

pub fn curve_new(h: RatPolynomial) -> Result<HyperellipticCurve> {
    HyperellipticCurve::new(h)
}

#[derive(Serialize, Deserialize)]
struct CurveFile {
    h: RatPolynomial,
}

impl Serialize for HyperellipticCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CurveFile { h: self.h.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HyperellipticCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = CurveFile::deserialize(d)?;
        HyperellipticCurve::new(f.h).map_err(serde::de::Error::custom)
    }
}
