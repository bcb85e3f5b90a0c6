//! Exact symbolic computation for the negative half of a quantum
//! Borcherds-Bozec algebra, its KLR (quiver Hecke) categorification data, and
//! the cyclotomic module of the Jordan quiver.
//!
//! Everything is computed over Q(q) with exact rational-function arithmetic;
//! there is no floating point anywhere in this crate.
//!
//! Module map:
//! - [`scalar`]: Laurent polynomials, rational functions in q, truncated
//!   q-series, the bar involution q -> q^-1, and q-combinatorics.
//! - [`cartan`]: Borcherds-Cartan data (real / isotropic / non-isotropic
//!   indices), strand labels, degrees, and quiver orientation.
//! - [`uminus`]: the free algebra on the generator alphabet, Lusztig-style
//!   bilinear form, Serre elements, and primitive generators for
//!   non-isotropic indices.
//! - [`klr`]: the quiver Hecke algebra R(nu): diagram basis, symbolic
//!   rewriting to normal form, the faithful polynomial action, graded
//!   dimensions, symmetrizers, and the Khovanov-Lauda pairing.
//! - [`smash`]: the smash product K[x_1..x_n] ⋊ S_n used as an independent
//!   linear-algebra oracle for pairings and cyclotomic quotients.
//! - [`symgrp`]: partitions, Kostka numbers, Specht dimensions, restriction
//!   chains, and the one-vertex canonical-basis transition matrices.
//! - [`cyclotomic`]: the rank-one isotropic (Jordan quiver) cyclotomic
//!   module: beta/alpha coefficient families, the Gauss identity, the module
//!   action on partitions, and brute-force quotient dimensions.

pub mod cartan;
pub mod cyclotomic;
pub mod klr;
pub mod linalg;
pub mod scalar;
pub mod smash;
pub mod symgrp;
pub mod uminus;
