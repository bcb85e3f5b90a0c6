//! Borcherds-Cartan data and the strand-label alphabets built on them.
//!
//! A Borcherds-Cartan datum is an even integer matrix A = (a_ij) indexed by a
//! finite set I together with positive symmetrizing integers (r_i), subject to
//!
//!   a_ii in {2, 0, -2, -4, ...},   a_ij <= 0 for i != j,
//!   r_i a_ij = r_j a_ji.
//!
//! The index set splits into
//!   I+  (real:          a_ii = 2),
//!   I0  (isotropic:     a_ii = 0),
//!   I-  (non-isotropic: a_ii < 0),
//! and the symmetric pairing on the root lattice is i.j = r_i a_ij.
//!
//! The datum also carries an orientation of the underlying graph (an edge
//! wherever a_ij != 0), used by the polynomial representation of the quiver
//! Hecke algebra. The default orients each edge from the lower index to the
//! higher one; edges between equal-index labels of different multiplicity are
//! oriented from lower to higher multiplicity.

mod config;
mod datum;
mod label;

pub use config::{load_config, parse_config, DatumConfig, NormOverrides};
pub use datum::{abc_datum, CartanDatum, Datum, IndexType};
pub use label::{crossing_degree, edge_forward, AlphabetMode, SequenceClass, StrandLabel};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    /// One or more axioms of a Borcherds-Cartan datum fail; every violation
    /// is listed.
    #[error("invalid Borcherds-Cartan datum:\n{}", .0.join("\n"))]
    Invalid(Vec<String>),
    #[error("unknown index name {0:?}")]
    UnknownIndex(String),
    /// A strand label violates its alphabet (e.g. multiplicity > 1 on a real
    /// index, or any multiplicity > 1 in appendix mode).
    #[error("invalid strand label: {0}")]
    BadLabel(String),
    /// Labels from different alphabet modes were mixed in one computation.
    #[error("alphabet mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("config error: {0}")]
    Config(String),
}
