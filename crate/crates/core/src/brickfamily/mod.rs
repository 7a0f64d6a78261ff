//! A one-parameter family of pairwise non-isomorphic bricks over a tensor
//! product of two algebras with nonzero cycles, and the resulting
//! τ-tilting infiniteness certificate.

mod family;
mod quotient;

pub use family::{certify_tensor, default_parameters, verify_family, Certificate, Evidence, FamilySpec, MemberRecord, Verdict};
pub use quotient::{minimal_quotient, MinimalQuotient, Minimality};

use crate::bqa::BqaError;
use crate::rep::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("no nonzero cycle of length at least 2 in the {0} factor")]
    NoCycle(&'static str),
    #[error("no suitable quotient: {0}")]
    QuotientNotFound(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("family member violates relation {0}")]
    RelationViolation(String),
    #[error(transparent)]
    Algebra(#[from] BqaError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
