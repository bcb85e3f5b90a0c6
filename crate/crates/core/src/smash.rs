//! The smash product `K[x_1, …, x_n] ⋊ S_n`: exact arithmetic and
//! per-degree linear algebra.
//!
//! This algebra is the quiver Hecke algebra of `n` strands with one
//! isotropic label (crossings square to one, braid relations are exact,
//! dots slide freely), so it serves as an independent oracle for pairing
//! values and cyclotomic quotient dimensions: both reduce to ranks of
//! explicit spanning sets computed degree by degree over the rationals.
//!
//! Basis: `x^u σ` with `u ∈ ℕ^n`, `σ ∈ S_n`.  The product rule is
//! `(x^u σ)(x^v ρ) = x^{u + σ(v)} σρ`, where `σ(v)` moves the exponent at
//! slot `t` to slot `σ(t)`.  Every `x_t` is homogeneous of one common
//! degree `2r`; group elements sit in degree zero.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::klr::Perm;
use crate::linalg::RowReducer;
use crate::scalar::TruncSeries;

/// An element of `K[x_1, …, x_n] ⋊ S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SmashElem {
    terms: BTreeMap<(Vec<u32>, Perm), BigRational>,
}

impl SmashElem {
    pub fn zero() -> Self {
        SmashElem::default()
    }

    pub fn one(n: usize) -> Self {
        SmashElem::monomial(vec![0; n], Perm::identity(n))
    }

    pub fn monomial(exps: Vec<u32>, perm: Perm) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((exps, perm), BigRational::one());
        SmashElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u32>, Perm), &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: (Vec<u32>, Perm), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &SmashElem) -> SmashElem {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigRational) -> SmashElem {
        if c.is_zero() {
            return SmashElem::zero();
        }
        SmashElem {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Product with the permutations acting on polynomial slots:
    /// `(x^u σ)(x^v ρ) = x^{u + σ(v)} σρ`.
    pub fn mul(&self, other: &SmashElem) -> SmashElem {
        let mut out = SmashElem::zero();
        for ((u, sigma), c1) in &self.terms {
            for ((v, rho), c2) in &other.terms {
                let mut exps = u.clone();
                for (t, &e) in v.iter().enumerate() {
                    exps[sigma.image(t)] += e;
                }
                out.add_term((exps, sigma.compose(rho)), c1 * c2);
            }
        }
        out
    }
}

/// All elements of the Young subgroup `S_{λ_1} × S_{λ_2} × ⋯` embedded in
/// `S_n` along consecutive blocks.
pub fn young_subgroup(blocks: &[u32]) -> Vec<Perm> {
    let n: usize = blocks.iter().map(|&b| b as usize).sum();
    let mut out = vec![Perm::identity(n)];
    let mut offset = 0usize;
    for &b in blocks {
        let b = b as usize;
        let locals = Perm::all(b);
        let mut next = Vec::with_capacity(out.len() * locals.len());
        for base in &out {
            for local in &locals {
                let mut images = base.images().to_vec();
                for t in 0..b {
                    images[offset + t] = base.image(offset + local.image(t));
                }
                next.push(Perm::from_images(images));
            }
        }
        out = next;
        offset += b;
    }
    out
}

/// The block-averaging idempotent `(1/|S_λ|) Σ_{σ ∈ S_λ} σ`.
pub fn block_averaging(blocks: &[u32]) -> SmashElem {
    let group = young_subgroup(blocks);
    let scale =
        BigRational::one() / BigRational::from_integer((group.len() as i64).into());
    let n: usize = blocks.iter().map(|&b| b as usize).sum();
    let mut out = SmashElem::zero();
    for sigma in group {
        out.add_term((vec![0; n], sigma), scale.clone());
    }
    out
}

/// All exponent vectors in `n` slots with the given total.
pub fn monomials_of_total(n: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            rec(n - 1, total - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n.max(1), total, &mut Vec::new(), &mut out);
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    out
}

fn column_index(
    exps: &[u32],
    perm: &Perm,
    monomials: &[Vec<u32>],
    perms: &[Perm],
) -> usize {
    let mi = monomials.iter().position(|m| m == exps).unwrap();
    let pi = perms.iter().position(|p| p == perm).unwrap();
    mi * perms.len() + pi
}

fn rank_of_span(vectors: &[SmashElem], total: u32, n: usize) -> usize {
    let monomials = monomials_of_total(n, total);
    let perms = Perm::all(n);
    let width = monomials.len() * perms.len();
    let mut reducer = RowReducer::new(width);
    for v in vectors {
        let mut row = vec![BigRational::zero(); width];
        for ((exps, perm), c) in v.terms() {
            row[column_index(exps, perm, &monomials, &perms)] = c.clone();
        }
        reducer.insert(row);
    }
    reducer.rank()
}

/// Graded dimension of `e_λ (K[x] ⋊ S_n) e_μ` as a series in `q`, with
/// every `x_t` of degree `2r`, truncated at `order`.  Computed as the rank
/// of the spanning set `{e_λ x^u σ e_μ}` in each degree.
pub fn sandwich_dim_series(
    r: i64,
    blocks_left: &[u32],
    blocks_right: &[u32],
    order: usize,
) -> TruncSeries {
    let n: usize = blocks_left.iter().map(|&b| b as usize).sum();
    assert_eq!(
        n,
        blocks_right.iter().map(|&b| b as usize).sum::<usize>(),
        "block sizes must agree"
    );
    let e_left = block_averaging(blocks_left);
    let e_right = block_averaging(blocks_right);
    let perms = Perm::all(n);
    let step = (2 * r) as usize;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut total = 0u32;
    while (total as usize) * step <= order {
        let mut vectors = Vec::new();
        for u in monomials_of_total(n, total) {
            for sigma in &perms {
                let mid = SmashElem::monomial(u.clone(), sigma.clone());
                vectors.push(e_left.mul(&mid).mul(&e_right));
            }
        }
        let rank = rank_of_span(&vectors, total, n);
        coeffs[(total as usize) * step] = BigRational::from_integer((rank as i64).into());
        total += 1;
    }
    TruncSeries::from_coeffs(order, coeffs)
}

/// Graded dimension of the quotient of `K[x] ⋊ S_n` by the two-sided
/// ideal generated by `x_1^a`, truncated at `order`; every `x_t` has
/// degree `2r`.  The ideal is closed degree by degree from the spanning
/// set `{x^u σ · x_1^a · x^v ρ}` and quotient dimensions are ambient
/// dimension minus ideal rank.
pub fn cyclotomic_quotient_dim_series(r: i64, n: usize, a: u32, order: usize) -> TruncSeries {
    let perms = Perm::all(n);
    let step = (2 * r) as usize;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let generator = SmashElem::monomial(
        {
            let mut e = vec![0; n];
            e[0] = a;
            e
        },
        Perm::identity(n),
    );
    let mut total = 0u32;
    while (total as usize) * step <= order {
        let ambient = monomials_of_total(n, total).len() * perms.len();
        let rank = if total < a {
            0
        } else {
            let mut vectors = Vec::new();
            for left_total in 0..=(total - a) {
                let right_total = total - a - left_total;
                for u in monomials_of_total(n, left_total) {
                    for sigma in &perms {
                        let left = SmashElem::monomial(u.clone(), sigma.clone());
                        for v in monomials_of_total(n, right_total) {
                            for rho in &perms {
                                let right = SmashElem::monomial(v.clone(), rho.clone());
                                vectors.push(left.mul(&generator).mul(&right));
                            }
                        }
                    }
                }
            }
            rank_of_span(&vectors, total, n)
        };
        coeffs[(total as usize) * step] =
            BigRational::from_integer(((ambient - rank) as i64).into());
        total += 1;
    }
    TruncSeries::from_coeffs(order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn product_rule_moves_exponents() {
        // (x_2 s_1)(x_1) = x_2 x_{s_1(1)} s_1 = x_2² s_1 with 0-based slots.
        let s0 = Perm::transposition(2, 0);
        let a = SmashElem::monomial(vec![0, 1], s0.clone());
        let b = SmashElem::monomial(vec![1, 0], Perm::identity(2));
        let ab = a.mul(&b);
        assert_eq!(ab, SmashElem::monomial(vec![0, 2], s0.clone()));
        // Opposite order: (x_1)(x_2 s_1) = x_1 x_2 s_1.
        let ba = b.mul(&a);
        assert_eq!(ba, SmashElem::monomial(vec![1, 1], s0));
    }

    #[test]
    fn averaging_is_idempotent() {
        for blocks in [vec![3], vec![2, 1], vec![1, 1, 1]] {
            let e = block_averaging(&blocks);
            assert_eq!(e.mul(&e), e);
        }
    }

    #[test]
    fn young_subgroup_sizes() {
        assert_eq!(young_subgroup(&[3]).len(), 6);
        assert_eq!(young_subgroup(&[2, 1]).len(), 2);
        assert_eq!(young_subgroup(&[2, 2]).len(), 4);
    }

    #[test]
    fn full_sandwich_dimension_is_symmetric_polynomials() {
        // e_n (K[x] ⋊ S_n) e_n has the dimensions of symmetric
        // polynomials: partitions with at most n parts.
        let s = sandwich_dim_series(1, &[2], &[2], 12);
        for k in 0..=6 {
            let expected = (k / 2 + 1) as i64; // partitions of k into ≤ 2 parts
            assert_eq!(s.coeff(2 * k), rat(expected), "degree {}", 2 * k);
        }
    }

    #[test]
    fn trivial_blocks_give_group_algebra_dimension() {
        // e with singleton blocks is the identity; degree zero holds all
        // of K S_n.
        let s = sandwich_dim_series(1, &[1, 1], &[1, 1], 4);
        assert_eq!(s.coeff(0), rat(2));
        assert_eq!(s.coeff(2), rat(4));
    }

    #[test]
    fn quotient_collapses_at_a_equals_one() {
        // a = 1 kills every dot: only the group algebra survives.
        let s = cyclotomic_quotient_dim_series(1, 2, 1, 6);
        assert_eq!(s.coeff(0), rat(2));
        for k in 1..=6 {
            assert_eq!(s.coeff(k), rat(0));
        }
    }

    #[test]
    fn quotient_matches_truncated_polynomial_count() {
        // n = 1: K[x]/(x^a) has dimensions 1 in degrees 0, 2, …, 2(a-1).
        let s = cyclotomic_quotient_dim_series(1, 1, 3, 8);
        for k in 0..=8 {
            let expected = if k % 2 == 0 && k / 2 < 3 { 1 } else { 0 };
            assert_eq!(s.coeff(k), rat(expected));
        }
    }
}
