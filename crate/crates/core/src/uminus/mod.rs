//! The negative half of the quantum Borcherds-Bozec algebra.
//!
//! Elements live in the free algebra on the alphabet I^infty (letters F_i
//! for real i, F_{il} or b_{il} for imaginary i, l >= 1); the defining
//! relations are never imposed syntactically. Instead the algebra carries
//! the twisted coproduct rho and the bilinear form { , }, and "equality in
//! the quantum group" is the radical test: x = y iff {x - y, w} = 0 for
//! every word w of the shared weight. The form is fully computable from the
//! generator norms by splitting one argument and pairing against rho of the
//! other, so this equality is decidable weight space by weight space.

mod algebra;
mod element;
mod tensor;
mod word;

pub use algebra::{Algebra, NormMode, PsiDirection};
pub use element::{divided_power, serre_element, UElement};
pub use tensor::TensorElement;
pub use word::{weights_up_to_height, words_of_weight, FreeWord, GenIndex, Weight};

use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UminusError {
    #[error("bad generator: {0}")]
    BadGenerator(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    /// A Gram matrix expected to be invertible is singular; signals an
    /// inconsistent norm table.
    #[error("singular Gram matrix: {0}")]
    SingularGram(String),
    #[error("norm mode error: {0}")]
    Mode(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
