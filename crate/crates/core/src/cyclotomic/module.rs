//! The irreducible highest-weight module `V(Λ)` of the Jordan-quiver
//! algebra, with basis `F_λ v_Λ` indexed by partitions.
//!
//! The negative half is a commutative polynomial algebra on the `F_t`,
//! so `F_t` inserts a part.  `E_ℓ` is defined recursively through the
//! commutator expansion; well-definedness (independence of the peeled
//! part) is a theorem, re-verified here as a test.

use std::collections::BTreeMap;

use crate::cyclotomic::coeffs::alpha;
use crate::cyclotomic::{CycloError, JordanConfig};
use crate::scalar::RatFunc;
use crate::symgrp::{partitions, Partition};

/// An element of `V(Λ)`: finitely many basis coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VLambdaVector {
    terms: BTreeMap<Partition, RatFunc>,
}

impl VLambdaVector {
    pub fn zero() -> Self {
        VLambdaVector::default()
    }

    /// The highest-weight vector `v_Λ`.
    pub fn highest() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(shape: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(shape, RatFunc::one());
        VLambdaVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shape: &Partition) -> RatFunc {
        self.terms.get(shape).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, shape: Partition, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(shape);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (shape, c) in &other.terms {
            out.add_term(shape.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let minus_one = RatFunc::from_int(-1);
        self.add(&other.scaled(&minus_one))
    }

    pub fn scaled(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        VLambdaVector {
            terms: self
                .terms
                .iter()
                .map(|(shape, v)| (shape.clone(), v * c))
                .collect(),
        }
    }
}

/// A generator of the Jordan-quiver quantum algebra acting on `V(Λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JordanGen {
    /// `E_ℓ`, lowering the level by `ℓ`.
    E(u32),
    /// `F_t`, raising the level by `t`.
    F(u32),
    /// `K`, the scalar `q_i^a` on all of `V(Λ)`.
    K,
}

fn insert_part(shape: &Partition, t: u32) -> Partition {
    let mut parts = shape.parts().to_vec();
    let pos = parts.partition_point(|&p| p >= t);
    parts.insert(pos, t);
    Partition::new(parts).expect("inserting a positive part keeps a partition")
}

fn f_mult(t: u32, v: &VLambdaVector) -> VLambdaVector {
    if t == 0 {
        return v.clone();
    }
    let mut out = VLambdaVector::zero();
    for (shape, c) in v.terms() {
        out.add_term(insert_part(shape, t), c.clone());
    }
    out
}

/// `E_ℓ` on a basis vector, peeling the part at `peel` (0-based among
/// the descending parts):
/// `E_ℓ(F_t w) = F_t E_ℓ(w) + Σ_{p=1}^{min(ℓ,t)} α_p F_{t-p} E_{ℓ-p}(w)`.
pub fn e_action_peeled(
    shape: &Partition,
    l: u32,
    peel: usize,
    config: &JordanConfig,
) -> Result<VLambdaVector, CycloError> {
    if l == 0 {
        return Ok(VLambdaVector::basis(shape.clone()));
    }
    if shape.is_empty() {
        return Ok(VLambdaVector::zero());
    }
    if peel >= shape.len() {
        return Err(CycloError::Bound {
            what: "peel position",
            got: peel as i64,
            max: shape.len() as i64 - 1,
        });
    }
    let t = shape.part(peel);
    let mut rest = shape.parts().to_vec();
    rest.remove(peel);
    let rest = Partition::new(rest).expect("removing a part keeps a partition");

    let mut out = f_mult(t, &e_action_peeled(&rest, l, 0, config)?);
    for p in 1..=l.min(t) {
        let tail = e_action_peeled(&rest, l - p, 0, config)?;
        out = out.add(&f_mult(t - p, &tail).scaled(&alpha(p, config)));
    }
    Ok(out)
}

fn e_mult(l: u32, v: &VLambdaVector, config: &JordanConfig) -> VLambdaVector {
    let mut out = VLambdaVector::zero();
    for (shape, c) in v.terms() {
        let image = e_action_peeled(shape, l, 0, config)
            .expect("peel position 0 is valid on nonempty shapes");
        out = out.add(&image.scaled(c));
    }
    out
}

/// Applies one generator to a vector.
pub fn module_action(gen: JordanGen, v: &VLambdaVector, config: &JordanConfig) -> VLambdaVector {
    match gen {
        JordanGen::F(t) => f_mult(t, v),
        JordanGen::K => v.scaled(&RatFunc::q_pow(config.r() * i64::from(config.a()))),
        JordanGen::E(l) => {
            if l == 0 {
                v.clone()
            } else {
                e_mult(l, v, config)
            }
        }
    }
}

/// Verifies `E_ℓ F_t - F_t E_ℓ = Σ_{p=1}^{min(ℓ,t)} α_p F_{t-p} E_{ℓ-p}`
/// on every basis vector of level `n`.
pub fn commutator_check(l: u32, t: u32, n: u32, config: &JordanConfig) -> bool {
    assert!(l >= 1 && t >= 1, "commutator needs positive generators");
    for shape in partitions(n) {
        let v = VLambdaVector::basis(shape);
        let lhs = e_mult(l, &f_mult(t, &v), config).sub(&f_mult(t, &e_mult(l, &v, config)));
        let mut rhs = VLambdaVector::zero();
        for p in 1..=l.min(t) {
            let tail = if l == p { v.clone() } else { e_mult(l - p, &v, config) };
            rhs = rhs.add(&f_mult(t - p, &tail).scaled(&alpha(p, config)));
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Searches for a composition of `E_ℓ`'s sending `v` to a vector with a
/// nonzero `v_Λ` coefficient; levels strictly drop, so the search always
/// terminates.
pub fn reaches_highest(v: &VLambdaVector, config: &JordanConfig) -> bool {
    if v.is_zero() {
        return false;
    }
    if !v.coeff(&Partition::empty()).is_zero() {
        return true;
    }
    let max_level = v.terms().map(|(s, _)| s.size()).max().unwrap_or(0);
    (1..=max_level).any(|l| reaches_highest(&e_mult(l, v, config), config))
}
