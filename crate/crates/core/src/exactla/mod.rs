//! Exact linear algebra over the rationals and prime fields.

pub mod fdalg;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sparse;

pub use fdalg::FdAlgebra;
pub use field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
pub use matrix::{Matrix, Rref};
pub use poly::Poly;
pub use rational::Rational;
pub use sparse::{SparseEchelon, SparseVec};
