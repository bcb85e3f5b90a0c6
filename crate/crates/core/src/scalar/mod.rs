//! Exact arithmetic in Z[q, q^-1], Q(q), and truncated q-series.
//!
//! All coefficients are arbitrary-precision rationals ([`num::BigRational`]).
//! The three layers are:
//!
//! - [`LaurentPoly`]: finite sums sum_k c_k q^k with k in Z,
//! - [`RatFunc`]: quotients of Laurent polynomials kept in a canonical form
//!   so that structural equality is mathematical equality,
//! - [`TruncSeries`]: power-series expansions at q = 0 cut at a fixed order,
//!   for quantities only available degree by degree.
//!
//! [`qcomb`] provides balanced q-integers, q-factorials, Gaussian binomials
//! and q-Pochhammer symbols on top of these.

mod laurent;
mod qcomb;
mod ratfunc;
mod series;

pub use laurent::LaurentPoly;
pub use qcomb::{pochhammer, qbinom, qfact, qint};
pub use ratfunc::RatFunc;
pub use series::TruncSeries;

use thiserror::Error;

/// Rational coefficient type used throughout the crate.
pub type Coeff = num::BigRational;

/// Default truncation order for series comparisons.
pub const DEFAULT_SERIES_ORDER: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by the zero rational function.
    #[error("division by zero")]
    DivisionByZero,
    /// The rational function has a pole at q = 0 and no power-series
    /// expansion there.
    #[error("not expandable at q = 0: {0}")]
    NotExpandable(String),
    /// Arguments outside the defining range of a q-combinatorial quantity.
    #[error("domain error: {0}")]
    Domain(String),
}
