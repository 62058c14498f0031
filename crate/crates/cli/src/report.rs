//! JSON report shapes. Every report is wrapped with a schema version and
//! the subcommand name.

use primpoints::contract::{Contraction, DimensionComparison};
use primpoints::hypcurve::{CurveFunction, Divisor, HyperellipticCurve};
use primpoints::numfield::PrimitivityCertificate;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub command: String,
    #[serde(flatten)]
    pub report: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, report: T) -> Self {
        Envelope { schema_version: SCHEMA_VERSION, command: command.to_string(), report }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveInfo {
    pub curve: HyperellipticCurve,
    pub genus: usize,
    pub degree: usize,
    /// `-v_inf(y)`.
    pub y_pole_order: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionDegree {
    pub f: CurveFunction,
    pub degree: usize,
    pub pole_divisor: Divisor,
    pub zero_divisor: Divisor,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContrEntry {
    #[serde(flatten)]
    pub contraction: Contraction,
    /// Absent when `deg D <= 2g`.
    pub dimension: Option<DimensionComparison>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContrReport {
    pub divisor: Divisor,
    pub contractions: Vec<ContrEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub infinity_families: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub certificate: PrimitivityCertificate,
    pub verified: bool,
}
