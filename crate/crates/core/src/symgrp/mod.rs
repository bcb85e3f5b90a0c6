//! Characteristic-zero symmetric-group combinatorics.
//!
//! This module carries the counting side of the isotropic-vertex story:
//! Kostka numbers, Specht dimensions, restriction along chains of Young
//! diagrams, trivial-module multiplicities of skew shapes, and the
//! unitriangular transition matrices between the complete-homogeneous and
//! Schur bases that govern the one-vertex canonical basis.

mod character;
mod partition;
mod tableaux;

pub use character::{
    chain_dimension, character_vector, restriction_chains, strip_chain_count,
    transition_one_vertex, transpose_permutation, unitriangularity_matrix, Chain,
    CharacterVector, TransitionDirection,
};
pub use partition::{compositions, partitions, Composition, Partition};
pub use tableaux::{
    factorial, kostka, skew_syt_count, skew_trivial_multiplicity, specht_dim, syt_count,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymgrpError {
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },
    #[error("shape {inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
}
