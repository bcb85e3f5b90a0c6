//! The cyclotomic story for the Jordan quiver: one isotropic vertex `i`
//! with `a_{ii} = 0`, a dominant weight of level `a = Λ(h_i)`, the
//! commutator scalars `α_p` tying the quotient's graded dimensions
//! (`β_p`) to the module structure, and the highest-weight module
//! `V(Λ)` itself with basis indexed by partitions.
//!
//! Sign convention: `α_1 = ν_1(K^{-1} - K)`, the unique choice under
//! which `α_p = q_i^{-pa} β_p` solves the commutator recursion exactly.

pub mod coeffs;
pub mod module;
pub mod quotient;

pub use coeffs::{alpha, alpha_by_recursion, beta, gauss_identity_check, nu};
pub use module::{
    commutator_check, e_action_peeled, module_action, reaches_highest, JordanGen, VLambdaVector,
};
pub use quotient::{cyclotomic_quotient_dims, QuotientDims};

use crate::scalar::ScalarError;

/// One isotropic vertex with symmetrizer entry `r` and weight level `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JordanConfig {
    r: i64,
    a: u32,
}

impl JordanConfig {
    pub fn new(r: i64, a: u32) -> Result<Self, CycloError> {
        if r < 1 {
            return Err(CycloError::Domain(format!(
                "symmetrizer entry must be positive, got {r}"
            )));
        }
        Ok(JordanConfig { r, a })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn a(&self) -> u32 {
        self.a
    }
}

/// Errors from the cyclotomic computations.
#[derive(Debug, thiserror::Error)]
pub enum CycloError {
    /// An argument outside the supported (or meaningful) range.
    #[error("{what} {got} outside supported range (max {max})")]
    Bound {
        what: &'static str,
        got: i64,
        max: i64,
    },
    /// An argument violating a structural precondition.
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
