//! Characters of Specht modules and the one-vertex transition matrices.
//!
//! For a single isotropic vertex the projective indecomposables multiply
//! like complete homogeneous symmetric functions and the irreducibles sit on
//! the Schur basis, so the change of basis is the Kostka matrix
//! h_lambda = sum_mu K_{mu,lambda} s_mu, unitriangular with respect to the
//! descending lexicographic order of partitions.

use num::{BigRational, FromPrimitive, ToPrimitive};

use super::partition::{compositions, partitions, Composition, Partition};
use super::tableaux::{kostka, skew_syt_count, skew_trivial_multiplicity};
use super::SymgrpError;
use crate::linalg;

/// A chain of partitions growing to `lambda` with prescribed step sizes.
/// `steps[j]` has size b_1 + ... + b_{j+1}; the last entry is `lambda`.
pub type Chain = Vec<Partition>;

/// All chains empty -> lambda whose j-th step adds b_j cells. Steps are not
/// constrained to horizontal strips; callers weight each step as needed.
pub fn restriction_chains(lambda: &Partition, b: &Composition) -> Result<Vec<Chain>, SymgrpError> {
    if lambda.size() != b.size() {
        return Err(SymgrpError::SizeMismatch { left: lambda.size(), right: b.size() });
    }
    fn go(top: &Partition, sizes: &[u32], suffix: &mut Chain, out: &mut Vec<Chain>) {
        let Some((&last, rest)) = sizes.split_last() else {
            debug_assert!(top.is_empty());
            let mut chain = suffix.clone();
            chain.reverse();
            out.push(chain);
            return;
        };
        suffix.push(top.clone());
        let smaller_size = top.size() - last;
        for inner in partitions(smaller_size) {
            if top.contains(&inner) {
                go(&inner, rest, suffix, out);
            }
        }
        suffix.pop();
    }
    let mut out = Vec::new();
    go(lambda, b.parts(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Dimension of the restriction of the Specht module along a chain: the
/// product of skew standard-tableau counts over the steps.
pub fn chain_dimension(chain: &Chain) -> u64 {
    let mut dim = 1;
    let mut prev = Partition::empty();
    for step in chain {
        dim *= skew_syt_count(step, &prev).expect("chain steps nest");
        prev = step.clone();
    }
    dim
}

/// Number of chains whose every step is a horizontal strip; equals the
/// Kostka number K_{lambda,b}.
pub fn strip_chain_count(lambda: &Partition, b: &Composition) -> Result<u64, SymgrpError> {
    let chains = restriction_chains(lambda, b)?;
    let mut total = 0;
    for chain in &chains {
        let mut prev = Partition::empty();
        let mut product = 1;
        for step in chain {
            product *= skew_trivial_multiplicity(step, &prev)?;
            prev = step.clone();
        }
        total += product;
    }
    Ok(total)
}

/// The character of the Specht module S^lambda: for every composition c of
/// |lambda|, the multiplicity of the symmetrizer chain e_c, which equals
/// K_{lambda,c}. Entries are stored in composition enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterVector {
    shape: Partition,
    entries: Vec<(Composition, u64)>,
}

impl CharacterVector {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[(Composition, u64)] {
        &self.entries
    }

    pub fn get(&self, c: &Composition) -> Option<u64> {
        self.entries.iter().find(|(comp, _)| comp == c).map(|&(_, v)| v)
    }
}

pub fn character_vector(lambda: &Partition) -> CharacterVector {
    let entries = compositions(lambda.size())
        .into_iter()
        .map(|c| {
            let v = strip_chain_count(lambda, &c).expect("sizes match by construction");
            (c, v)
        })
        .collect();
    CharacterVector { shape: lambda.clone(), entries }
}

/// The matrix M[c][s] = K_{lambda_s, lambda_c} over partitions of n in
/// descending lexicographic order; rows index the symmetrizer content,
/// columns the Specht shape. Lower unitriangular.
pub fn unitriangularity_matrix(n: u32) -> (Vec<Partition>, Vec<Vec<u64>>) {
    let parts = partitions(n);
    let matrix = parts
        .iter()
        .map(|content| {
            parts
                .iter()
                .map(|shape| kostka(shape, &Composition::from(content)).expect("equal sizes"))
                .collect()
        })
        .collect();
    (parts, matrix)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionDirection {
    /// Rows express h_lambda in the Schur basis: entries K_{mu,lambda}.
    ProjectiveToIrreducible,
    /// The integer inverse: Schur functions in the h basis.
    IrreducibleToProjective,
}

/// One-vertex transition matrix between the projective basis (complete
/// homogeneous) and the irreducible basis (Schur), indexed by partitions of
/// n in descending lexicographic order.
pub fn transition_one_vertex(n: u32, direction: TransitionDirection) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let parts = partitions(n);
    let forward: Vec<Vec<i64>> = parts
        .iter()
        .map(|lambda| {
            parts
                .iter()
                .map(|mu| kostka(mu, &Composition::from(lambda)).expect("equal sizes") as i64)
                .collect()
        })
        .collect();
    let matrix = match direction {
        TransitionDirection::ProjectiveToIrreducible => forward,
        TransitionDirection::IrreducibleToProjective => {
            let rational: Vec<Vec<BigRational>> = forward
                .iter()
                .map(|row| row.iter().map(|&e| BigRational::from_i64(e).unwrap()).collect())
                .collect();
            let inverse = linalg::invert(&rational).expect("Kostka matrix is unitriangular");
            inverse
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            debug_assert!(e.is_integer());
                            e.to_integer().to_i64().expect("inverse Kostka entry fits in i64")
                        })
                        .collect()
                })
                .collect()
        }
    };
    (parts, matrix)
}

/// Position of each partition's transpose within the same enumeration.
pub fn transpose_permutation(parts: &[Partition]) -> Vec<usize> {
    parts
        .iter()
        .map(|p| {
            let t = p.conjugate();
            parts.iter().position(|x| *x == t).expect("transpose stays within partitions of n")
        })
        .collect()
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::symgrp::tableaux::specht_dim;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn chains_enumerate_subdiagrams() {
        let chains = restriction_chains(&p(&[2, 1]), &c(&[2, 1])).unwrap();
        assert_eq!(chains.len(), 2);
        assert!(chains.contains(&vec![p(&[2]), p(&[2, 1])]));
        assert!(chains.contains(&vec![p(&[1, 1]), p(&[2, 1])]));
        // A row shape has a unique chain for any composition.
        for b in compositions(4) {
            assert_eq!(restriction_chains(&p(&[4]), &b).unwrap().len(), 1);
        }
        assert!(restriction_chains(&p(&[2]), &c(&[3])).is_err());
    }

    #[test]
    fn restriction_preserves_dimension() {
        for n in 1..=6u32 {
            for lam in partitions(n) {
                let dim = specht_dim(&lam);
                for b in compositions(n) {
                    let total: u64 = restriction_chains(&lam, &b)
                        .unwrap()
                        .iter()
                        .map(chain_dimension)
                        .sum();
                    assert_eq!(total, dim, "lambda = {lam}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn characters_of_three_cells() {
        let triv = character_vector(&p(&[3]));
        for (_, v) in triv.entries() {
            assert_eq!(*v, 1);
        }
        let std3 = character_vector(&p(&[2, 1]));
        assert_eq!(std3.get(&c(&[3])), Some(0));
        assert_eq!(std3.get(&c(&[2, 1])), Some(1));
        assert_eq!(std3.get(&c(&[1, 2])), Some(1));
        assert_eq!(std3.get(&c(&[1, 1, 1])), Some(2));
        let sign = character_vector(&p(&[1, 1, 1]));
        for (comp, v) in sign.entries() {
            let expected = u64::from(comp.parts() == [1, 1, 1]);
            assert_eq!(*v, expected, "at {comp}");
        }
    }

    #[test]
    fn character_entries_are_kostka() {
        for n in 1..=6u32 {
            for lam in partitions(n) {
                let ch = character_vector(&lam);
                for (comp, v) in ch.entries() {
                    assert_eq!(*v, kostka(&lam, comp).unwrap(), "lambda = {lam}, c = {comp}");
                }
            }
        }
    }

    #[test]
    fn unitriangular_structure() {
        let (parts, m) = unitriangularity_matrix(2);
        assert_eq!(parts, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(m, vec![vec![1, 0], vec![1, 1]]);
        for n in 1..=6u32 {
            let (parts, m) = unitriangularity_matrix(n);
            for (rc, row) in m.iter().enumerate() {
                assert_eq!(row[rc], 1, "diagonal at {}", parts[rc]);
                for (cl, &entry) in row.iter().enumerate() {
                    if rc < cl {
                        assert_eq!(entry, 0, "content {} > shape {}", parts[rc], parts[cl]);
                    }
                }
            }
        }
    }

    #[test]
    fn transition_round_trip() {
        let (parts, h_to_s) = transition_one_vertex(2, TransitionDirection::ProjectiveToIrreducible);
        assert_eq!(parts, vec![p(&[2]), p(&[1, 1])]);
        // h_(2) = s_(2); h_(1,1) = s_(2) + s_(1,1).
        assert_eq!(h_to_s, vec![vec![1, 0], vec![1, 1]]);
        for n in 1..=6u32 {
            let (_, fwd) = transition_one_vertex(n, TransitionDirection::ProjectiveToIrreducible);
            let (_, inv) = transition_one_vertex(n, TransitionDirection::IrreducibleToProjective);
            let k = fwd.len();
            for r in 0..k {
                for cidx in 0..k {
                    let acc: i64 = (0..k).map(|t| fwd[r][t] * inv[t][cidx]).sum();
                    assert_eq!(acc, i64::from(r == cidx));
                }
            }
        }
    }

    #[test]
    fn transpose_is_an_involution() {
        for n in 1..=6u32 {
            let parts = partitions(n);
            let perm = transpose_permutation(&parts);
            for (k, &t) in perm.iter().enumerate() {
                assert_eq!(perm[t], k);
            }
        }
    }
}
