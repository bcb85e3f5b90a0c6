//! The polynomial representation of the quiver Hecke algebra.
//!
//! For each sequence `𝒊` of strand labels there is a polynomial space
//! with variables `x_1(𝒊), …, x_n(𝒊)`; vectors here are rational linear
//! combinations of monomials tagged by their sequence.  Generators act by:
//! * `1_𝒋`: projection onto the component `𝒋`;
//! * `x_p`: multiplication by the slot-`p` variable;
//! * `τ_k`, by labels at slots `k`, `k+1` of the component:
//!   equal real: divided difference (component unchanged);
//!   `a_{ij} = 0` or crossing against the orientation: plain swap into
//!   the transposed component;
//!   equal non-isotropic `(i,ℓ)`: `(x_k^m + x_{k+1}^m)·swap` with
//!   `m = -ℓ² a_{ii}/2`;
//!   along the orientation: `(x_k^{m_k} + x_{k+1}^{m_{k+1}})·swap` into
//!   the transposed component, each exponent `-ℓℓ'·a` led by the Cartan
//!   row of the label at its own slot after the swap.
//!
//! The representation is faithful, which makes it an independent oracle
//! for the rewriting engine: a product is correct exactly when both sides
//! act identically on polynomials.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::cartan::{edge_forward, Datum, IndexType, StrandLabel};
use crate::klr::basis::KLRElement;
use crate::klr::engine::demazure_monomial;
use crate::klr::KlrError;

/// A vector in the polynomial representation: monomials tagged by their
/// sequence component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyVec {
    terms: BTreeMap<(Vec<StrandLabel>, Vec<u32>), BigRational>,
}

impl PolyVec {
    pub fn zero() -> Self {
        PolyVec::default()
    }

    pub fn monomial(seq: Vec<StrandLabel>, exps: Vec<u32>) -> Self {
        assert_eq!(seq.len(), exps.len(), "slot count mismatch");
        let mut terms = BTreeMap::new();
        terms.insert((seq, exps), BigRational::one());
        PolyVec { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<StrandLabel>, Vec<u32>), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, seq: &[StrandLabel], exps: &[u32]) -> BigRational {
        self.terms
            .get(&(seq.to_vec(), exps.to_vec()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, key: (Vec<StrandLabel>, Vec<u32>), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &PolyVec) -> PolyVec {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PolyVec) -> PolyVec {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigRational) -> PolyVec {
        if c.is_zero() {
            return PolyVec::zero();
        }
        PolyVec {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

/// The action of generators and elements on `PolyVec`s over a fixed
/// datum.
pub struct PolyAction {
    datum: Datum,
}

impl PolyAction {
    pub fn new(datum: Datum) -> Self {
        PolyAction { datum }
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    /// Projection onto the component of one sequence.
    pub fn project(&self, seq: &[StrandLabel], v: &PolyVec) -> PolyVec {
        PolyVec {
            terms: v
                .terms
                .iter()
                .filter(|((s, _), _)| s == seq)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by the slot-`p` variable.
    pub fn dot(&self, p: usize, v: &PolyVec) -> PolyVec {
        PolyVec {
            terms: v
                .terms
                .iter()
                .map(|((s, u), c)| {
                    let mut u2 = u.clone();
                    u2[p] += 1;
                    ((s.clone(), u2), c.clone())
                })
                .collect(),
        }
    }

    /// The crossing `τ_k` on every component of `v`.
    pub fn cross(&self, k: usize, v: &PolyVec) -> Result<PolyVec, KlrError> {
        let mut out = PolyVec::zero();
        for ((seq, u), c) in &v.terms {
            if k + 1 >= seq.len() {
                return Err(KlrError::OutOfRange {
                    what: "crossing",
                    got: k,
                    n: seq.len(),
                });
            }
            let a = &seq[k];
            let b = &seq[k + 1];
            let mut swapped_seq = seq.clone();
            swapped_seq.swap(k, k + 1);
            let mut swapped_u = u.clone();
            swapped_u.swap(k, k + 1);

            if a == b && self.datum.index_type(a.index()) == IndexType::Real {
                for (ek, ek1, sign) in demazure_monomial(u[k], u[k + 1]) {
                    let mut u2 = u.clone();
                    u2[k] = ek;
                    u2[k + 1] = ek1;
                    let signed = if sign >= 0 { c.clone() } else { -c.clone() };
                    out.add_term((seq.clone(), u2), signed);
                }
            } else if a == b && self.datum.index_type(a.index()) == IndexType::NonIsotropic {
                let l = i64::from(a.mult());
                let m = (-l * l * self.datum.a(a.index(), a.index()) / 2) as u32;
                for slot in [k, k + 1] {
                    let mut u2 = swapped_u.clone();
                    u2[slot] += m;
                    out.add_term((seq.clone(), u2), c.clone());
                }
            } else if self.datum.a(a.index(), b.index()) == 0 || !edge_forward(&self.datum, a, b) {
                out.add_term((swapped_seq, swapped_u), c.clone());
            } else {
                // Crossing along the orientation: after the swap, slot k
                // holds b and slot k+1 holds a; each exponent leads with
                // the Cartan row of its own slot's label.
                let prod = i64::from(a.mult()) * i64::from(b.mult());
                let mk = (-prod * self.datum.a(b.index(), a.index())) as u32;
                let mk1 = (-prod * self.datum.a(a.index(), b.index())) as u32;
                for (slot, extra) in [(k, mk), (k + 1, mk1)] {
                    let mut u2 = swapped_u.clone();
                    u2[slot] += extra;
                    out.add_term((swapped_seq.clone(), u2), c.clone());
                }
            }
        }
        Ok(out)
    }

    /// Action of a basis-expanded element: each term projects onto its
    /// source component, applies its crossing word right to left, then its
    /// dots.
    pub fn apply(&self, elem: &KLRElement, v: &PolyVec) -> Result<PolyVec, KlrError> {
        let mut out = PolyVec::zero();
        for (d, c) in elem.terms() {
            let mut w = self.project(&d.source, v);
            if w.is_zero() {
                continue;
            }
            for &l in d.perm.canonical_word().iter().rev() {
                w = self.cross(l, &w)?;
            }
            for (p, &e) in d.exps.iter().enumerate() {
                for _ in 0..e {
                    w = self.dot(p, &w);
                }
            }
            out = out.add(&w.scaled(c));
        }
        Ok(out)
    }
}

/// All exponent vectors whose weighted degree `Σ u_p · weight_p` is at
/// most `bound`.
pub fn monomials_up_to(weights: &[i64], bound: i64) -> Vec<Vec<u32>> {
    fn rec(weights: &[i64], bound: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match weights.split_first() {
            None => out.push(prefix.clone()),
            Some((&w, rest)) => {
                let mut e = 0u32;
                loop {
                    let used = i64::from(e) * w;
                    if used > bound {
                        break;
                    }
                    prefix.push(e);
                    rec(rest, bound - used, prefix, out);
                    prefix.pop();
                    e += 1;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(weights, bound, &mut Vec::new(), &mut out);
    out
}
