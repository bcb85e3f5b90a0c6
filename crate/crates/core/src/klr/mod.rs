//! Khovanov-Lauda-Rouquier algebras attached to a Borcherds-Cartan
//! datum, with strands labelled by vertices and multiplicities.
//!
//! The algebra is handled through two faithful models kept in exact
//! agreement by the test suite:
//!
//! - a diagram calculus ([`KlrAlgebra`]) normalizing products onto the
//!   basis `x^u τ_ω 1_i` of [`BasisDiagram`]s, and
//! - the polynomial representation ([`PolyAction`]) on components of
//!   labelled polynomial rings.
//!
//! On top of these sit the exhaustive relation checker ([`relations`]),
//! closed-form graded dimensions and the Khovanov-Lauda pairing
//! ([`dims`]), and the symmetrizer idempotents ([`symmetrizer`]).

pub mod action;
pub mod basis;
pub mod dims;
pub mod engine;
pub mod perm;
pub mod relations;
pub mod symmetrizer;

pub use action::{monomials_up_to, PolyAction, PolyVec};
pub use basis::{BasisDiagram, DegreeError, KLRElement};
pub use dims::{
    center_graded_dim, graded_dim, kl_pairing, projective_dim, serre_projective_check,
    swap_check, Block, DecoratedSeq, PairingShape, PairingValue, SerreProjectiveCheck,
};
pub use engine::{braid_correction_bound, demazure_monomial, square_case, KlrAlgebra, SquareCase};
pub use perm::{word_is_reduced, word_path, Perm, WordMove};
pub use relations::{
    sequence_classes, strand_alphabet, verify_all_relations, verify_local_relations,
    worker_threads, RelationCheck, RelationReport,
};
pub use symmetrizer::{averaging_idempotent, divided_power_idempotent, symmetrizer};

use crate::cartan::CartanError;

/// Errors from the diagram calculus and its derived computations.
#[derive(Debug, thiserror::Error)]
pub enum KlrError {
    /// A strand or crossing position outside the strand range.
    #[error("{what} {got} out of range for {n} strands")]
    OutOfRange {
        what: &'static str,
        got: usize,
        n: usize,
    },
    #[error(transparent)]
    Cartan(#[from] CartanError),
    /// A decoration or pairing shape with no supported closed form.
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
}
