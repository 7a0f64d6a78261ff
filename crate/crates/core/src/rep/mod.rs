//! Finite-dimensional representations of bound quiver algebras.

mod decompose;
mod hom;
mod morphism;
mod representation;
mod structure;

pub use decompose::{
    brick_criterion_socle, decompose, indecomposables_isomorphic, is_brick, is_indecomposable, is_isomorphic,
    Decomposition, Indecomposability,
};
pub use hom::{end_algebra, hom_basis, hom_dim, HomSpace};
pub use morphism::Morphism;
pub use representation::{Quot, Representation, Sub};
pub use structure::{in_fac, radical, socle, top};

use crate::bqa::BoundAlgebra;
use crate::exactla::fdalg::FdAlgebraError;
use crate::exactla::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("spans are not closed under arrow {0}")]
    NotSubrepresentation(String),
    #[error("representation is not indecomposable")]
    NotIndecomposable,
    #[error("operation needs a nonzero representation")]
    ZeroRepresentation,
    #[error(transparent)]
    Radical(#[from] FdAlgebraError),
}

pub fn simple_rep<F: Field>(alg: &BoundAlgebra<F>, v: usize) -> Representation<F> {
    Representation::simple(alg, v)
}

pub fn composition_factors<F: Field>(m: &Representation<F>) -> Vec<(usize, usize)> {
    m.composition_factors()
}

pub fn direct_sum<F: Field>(alg: &BoundAlgebra<F>, parts: &[Representation<F>]) -> Representation<F> {
    Representation::direct_sum(alg, parts)
}
