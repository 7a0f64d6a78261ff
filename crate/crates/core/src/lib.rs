//! Bound quiver algebras, their representations, tensor products, brick
//! families and support τ-tilting exploration, all in exact arithmetic.

pub mod bqa;
pub mod brickfamily;
pub mod cli;
pub mod exactla;
pub mod fixtures;
pub mod rep;
pub mod tautilt;
pub mod tensoralg;
