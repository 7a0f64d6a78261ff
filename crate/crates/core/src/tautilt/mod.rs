//! Support τ-tilting machinery: projectives, presentations, the Nakayama
//! functor, τ, mutation of support τ-tilting pairs and exchange graphs.

mod explore;
mod pair;
mod presentation;
mod projective;

pub use explore::{explore, order_isomorphism, poset_isomorphic, ExchangeGraph, Poset, DEFAULT_CAP};
pub use pair::{
    is_stt_pair, is_tau_rigid, left_approximation, mutate, mutation_direction, Direction, Mutation, PairKey, SttPair,
    Summand,
};
pub use presentation::{
    hom_from_projective_sum, min_projective_presentation, nakayama_of_map, tau, to_opposite, transpose, transpose_of,
    ProjectivePresentation,
};
pub use projective::{from_projective, injective_rep, projective_rep, projective_sum, regular_rep};

use crate::rep::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TauError {
    #[error("no element at position {0}")]
    BadPosition(usize),
    #[error("cannot mutate: {0}")]
    NotMutable(String),
    #[error("exchange graph is incomplete (node cap reached)")]
    Incomplete,
    #[error(transparent)]
    Rep(#[from] RepError),
}
