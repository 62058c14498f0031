//! Arithmetic in number fields `Q[x]/(m)`, factorization over them, and
//! primitivity certificates.

pub mod field;
pub mod primitivity;
pub mod subfields;
pub mod trager;

pub use field::{nf_arithmetic, FieldElement, FieldOp, NfPolynomial, NumberField};
pub use primitivity::{
    is_primitive_field, resolvent_cubic, CertMethod, Policy, PrimitivityCertificate,
    SpecializationEvidence, SubfieldWitness, Verdict,
};
pub use subfields::{principal_subfields, PrincipalSubfield};
pub use trager::{nf_poly_norm, trager_factor, NfFactorization};
