//! The diagram basis of the quiver Hecke algebra and linear combinations
//! of basis diagrams.
//!
//! A basis diagram is `x^u · τ_ŵ · 1_𝒊`: the idempotent of a source
//! sequence `𝒊` at the bottom, the crossing diagram of the canonical
//! reduced word of a permutation `w` in the middle, and dots at the top.
//! Dot exponents are therefore indexed by *target* positions: `exps[p]`
//! counts dots on the strand that ends at position `p`, whose label is
//! `target()[p]`.
//!
//! Coefficients are rational numbers; the variable `q` never enters
//! algebra elements, only graded-dimension bookkeeping.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};

use crate::cartan::{crossing_degree, CartanError, Datum, StrandLabel};
use crate::klr::perm::Perm;

/// A single basis diagram `x^u · τ_ŵ · 1_source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisDiagram {
    pub source: Vec<StrandLabel>,
    pub exps: Vec<u32>,
    pub perm: Perm,
}

impl BasisDiagram {
    /// The undotted idempotent diagram of a sequence.
    pub fn idem(source: Vec<StrandLabel>) -> Self {
        let n = source.len();
        BasisDiagram {
            source,
            exps: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    /// Target sequence: the strand starting at `p` ends at `perm(p)`.
    pub fn target(&self) -> Vec<StrandLabel> {
        self.perm.act_seq(&self.source)
    }

    /// Homogeneous degree: dot degrees at target positions plus crossing
    /// degrees over the inversions of the permutation.  Independent of the
    /// reduced word because crossing degrees are symmetric in the pair.
    pub fn degree(&self, datum: &Datum) -> Result<i64, CartanError> {
        let target = self.target();
        let mut deg = 0;
        for (p, &e) in self.exps.iter().enumerate() {
            deg += i64::from(e) * target[p].dot_degree(datum);
        }
        for (p, q) in self.perm.inversions() {
            deg += crossing_degree(datum, &self.source[p], &self.source[q])?;
        }
        Ok(deg)
    }
}

/// A finite rational linear combination of basis diagrams.  Terms with
/// different source sequences may coexist; products pair a term of the
/// right factor with a term of the left factor only when the target of the
/// former matches the source of the latter.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KLRElement {
    terms: BTreeMap<BasisDiagram, BigRational>,
}

impl KLRElement {
    pub fn zero() -> Self {
        KLRElement::default()
    }

    /// The idempotent `1_𝒊` of a sequence.
    pub fn idem(source: Vec<StrandLabel>) -> Self {
        KLRElement::from_diagram(BasisDiagram::idem(source))
    }

    pub fn from_diagram(d: BasisDiagram) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(d, BigRational::from_integer(1.into()));
        KLRElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisDiagram, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BasisDiagram) -> BigRational {
        self.terms.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c` times a diagram, dropping the entry if it cancels.
    pub fn add_term(&mut self, d: BasisDiagram, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(d).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &KLRElement) -> KLRElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KLRElement) -> KLRElement {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), -c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &BigRational) -> KLRElement {
        if c.is_zero() {
            return KLRElement::zero();
        }
        KLRElement {
            terms: self
                .terms
                .iter()
                .map(|(d, v)| (d.clone(), v * c))
                .collect(),
        }
    }

    /// Left multiplication by the dot `x_p` at target position `p` of
    /// every term.
    pub fn dotted(&self, p: usize) -> KLRElement {
        self.with_added_exps_at(&[(p, 1)])
    }

    /// Left multiplication by a dot monomial given as `(position, extra)`
    /// pairs on target positions.
    pub fn with_added_exps_at(&self, extra: &[(usize, u32)]) -> KLRElement {
        KLRElement {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| {
                    let mut d2 = d.clone();
                    for &(p, e) in extra {
                        d2.exps[p] += e;
                    }
                    (d2, c.clone())
                })
                .collect(),
        }
    }

    /// Left multiplication by the full dot monomial `x^u` (target
    /// positions).
    pub fn with_added_exps(&self, u: &[u32]) -> KLRElement {
        let extra: Vec<(usize, u32)> = u
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(p, &e)| (p, e))
            .collect();
        self.with_added_exps_at(&extra)
    }

    /// The common degree of all terms, `None` for the zero element.
    /// Errors if terms have distinct degrees (non-homogeneous element).
    pub fn degree(&self, datum: &Datum) -> Result<Option<i64>, DegreeError> {
        let mut deg = None;
        for (d, _) in &self.terms {
            let dd = d.degree(datum).map_err(DegreeError::Label)?;
            match deg {
                None => deg = Some(dd),
                Some(existing) if existing != dd => {
                    return Err(DegreeError::Mixed(existing, dd));
                }
                _ => {}
            }
        }
        Ok(deg)
    }
}

/// Failure modes of degree computation on an element.
#[derive(Debug)]
pub enum DegreeError {
    Label(CartanError),
    Mixed(i64, i64),
}

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeError::Label(e) => write!(f, "label error: {e}"),
            DegreeError::Mixed(a, b) => {
                write!(f, "element mixes degrees {a} and {b}")
            }
        }
    }
}
