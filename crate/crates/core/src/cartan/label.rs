//! Strand labels and multisets of them.
//!
//! The full alphabet is I+ ∪ I0 ∪ (I- x Z_{>0}): real and isotropic strands
//! are plain indices, while non-isotropic strands carry a multiplicity l and
//! stand for the l-th generator of their index. The appendix alphabet is
//! plain I (every multiplicity 1); it is a restriction of the full alphabet,
//! not a separate engine, and the degree formulas agree on it.
//!
//! Degrees: deg x_k = 2 r_{i_k} and deg tau_k = -l_k l_{k+1} (i_k . i_{k+1}).

use std::collections::BTreeSet;
use std::fmt;

use super::{CartanError, Datum, IndexType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlphabetMode {
    Full,
    Appendix,
}

/// One strand: an index of the datum plus a multiplicity.
///
/// Invariants (enforced by [`StrandLabel::new`]): multiplicity is 1 unless
/// the index is non-isotropic and the mode is `Full`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrandLabel {
    index: usize,
    mult: u32,
    mode: AlphabetMode,
}

impl StrandLabel {
    pub fn new(datum: &Datum, index: usize, mult: u32, mode: AlphabetMode) -> Result<Self, CartanError> {
        if index >= datum.len() {
            return Err(CartanError::BadLabel(format!("index {index} out of range")));
        }
        if mult == 0 {
            return Err(CartanError::BadLabel("multiplicity must be positive".into()));
        }
        if mult > 1 {
            if mode == AlphabetMode::Appendix {
                return Err(CartanError::BadLabel(format!(
                    "appendix-mode label ({}, {mult}) must have multiplicity 1",
                    datum.name(index)
                )));
            }
            if datum.index_type(index) != IndexType::NonIsotropic {
                return Err(CartanError::BadLabel(format!(
                    "label ({}, {mult}): only non-isotropic indices carry multiplicity",
                    datum.name(index)
                )));
            }
        }
        Ok(StrandLabel { index, mult, mode })
    }

    /// Plain full-mode label of multiplicity 1.
    pub fn plain(datum: &Datum, index: usize) -> Result<Self, CartanError> {
        Self::new(datum, index, 1, AlphabetMode::Full)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn mult(&self) -> u32 {
        self.mult
    }

    pub fn mode(&self) -> AlphabetMode {
        self.mode
    }

    /// deg x_k for a strand with this label.
    pub fn dot_degree(&self, datum: &Datum) -> i64 {
        2 * datum.r(self.index)
    }

    pub fn display<'a>(&self, datum: &'a Datum) -> StrandLabelDisplay<'a> {
        StrandLabelDisplay { name: datum.name(self.index), mult: self.mult }
    }
}

pub struct StrandLabelDisplay<'a> {
    name: &'a str,
    mult: u32,
}

impl fmt::Display for StrandLabelDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult == 1 {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{}:{}", self.name, self.mult)
        }
    }
}

/// deg tau_k for a crossing of strands labelled a (lower position) and b,
/// in either mode: -l_a l_b (i_a . i_b).
pub fn crossing_degree(datum: &Datum, a: &StrandLabel, b: &StrandLabel) -> Result<i64, CartanError> {
    if a.mode() != b.mode() {
        return Err(CartanError::ModeMismatch(format!(
            "crossing mixes {:?} and {:?} labels",
            a.mode(),
            b.mode()
        )));
    }
    Ok(-(a.mult() as i64) * (b.mult() as i64) * datum.dot(a.index(), b.index()))
}

/// True iff the oriented edge between two distinct labels points a -> b.
/// Distinct labels of the same index (non-isotropic, different multiplicity)
/// are oriented from lower to higher multiplicity.
pub fn edge_forward(datum: &Datum, a: &StrandLabel, b: &StrandLabel) -> bool {
    debug_assert!((a.index(), a.mult()) != (b.index(), b.mult()));
    if a.index() == b.index() {
        a.mult() < b.mult()
    } else {
        datum.oriented_forward(a.index(), b.index())
    }
}

/// A multiset of strand labels (the weight nu of a quiver Hecke block),
/// stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequenceClass {
    labels: Vec<StrandLabel>,
}

impl SequenceClass {
    pub fn new(mut labels: Vec<StrandLabel>) -> Result<Self, CartanError> {
        if let Some(first) = labels.first() {
            let mode = first.mode();
            if labels.iter().any(|l| l.mode() != mode) {
                return Err(CartanError::ModeMismatch("sequence class mixes alphabet modes".into()));
            }
        }
        labels.sort();
        Ok(SequenceClass { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[StrandLabel] {
        &self.labels
    }

    /// Total weight as index -> summed multiplicity.
    pub fn weight(&self) -> std::collections::BTreeMap<usize, u32> {
        let mut w = std::collections::BTreeMap::new();
        for l in &self.labels {
            *w.entry(l.index()).or_insert(0) += l.mult();
        }
        w
    }

    /// All distinct orderings of the labels.
    pub fn sequences(&self) -> Vec<Vec<StrandLabel>> {
        let mut out = BTreeSet::new();
        let mut current = Vec::with_capacity(self.labels.len());
        let mut pool = self.labels.clone();
        fn go(
            pool: &mut Vec<StrandLabel>,
            current: &mut Vec<StrandLabel>,
            out: &mut BTreeSet<Vec<StrandLabel>>,
        ) {
            if pool.is_empty() {
                out.insert(current.clone());
                return;
            }
            let mut seen = BTreeSet::new();
            for k in 0..pool.len() {
                let label = pool[k];
                if !seen.insert(label) {
                    continue;
                }
                pool.remove(k);
                current.push(label);
                go(pool, current, out);
                current.pop();
                pool.insert(k, label);
            }
        }
        go(&mut pool, &mut current, &mut out);
        out.into_iter().collect()
    }
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::cartan::CartanDatum;

    fn abc() -> Datum {
        CartanDatum::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![2, -1, -1], vec![-1, 0, 0], vec![-1, 0, -2]],
            vec![1, 1, 1],
        )
        .validate()
        .unwrap()
    }

    #[test]
    fn label_invariants() {
        let d = abc();
        assert!(StrandLabel::new(&d, 0, 2, AlphabetMode::Full).is_err());
        assert!(StrandLabel::new(&d, 1, 2, AlphabetMode::Full).is_err());
        assert!(StrandLabel::new(&d, 2, 2, AlphabetMode::Full).is_ok());
        assert!(StrandLabel::new(&d, 2, 2, AlphabetMode::Appendix).is_err());
        assert!(StrandLabel::new(&d, 2, 0, AlphabetMode::Full).is_err());
    }

    #[test]
    fn degrees() {
        let d = abc();
        let a = StrandLabel::plain(&d, 0).unwrap();
        let c2 = StrandLabel::new(&d, 2, 2, AlphabetMode::Full).unwrap();
        assert_eq!(a.dot_degree(&d), 2);
        // -l_a l_b (a.c) = -(1)(2)(-1) = 2
        assert_eq!(crossing_degree(&d, &a, &c2).unwrap(), 2);
        // -(2)(2)(c.c) = -(4)(-2) = 8
        assert_eq!(crossing_degree(&d, &c2, &c2).unwrap(), 8);
        let a_app = StrandLabel::new(&d, 0, 1, AlphabetMode::Appendix).unwrap();
        assert!(crossing_degree(&d, &a, &a_app).is_err());
    }

    #[test]
    fn degrees_are_symmetric() {
        let d = abc();
        let labels: Vec<StrandLabel> = vec![
            StrandLabel::plain(&d, 0).unwrap(),
            StrandLabel::plain(&d, 1).unwrap(),
            StrandLabel::new(&d, 2, 1, AlphabetMode::Full).unwrap(),
            StrandLabel::new(&d, 2, 3, AlphabetMode::Full).unwrap(),
        ];
        for x in &labels {
            for y in &labels {
                assert_eq!(
                    crossing_degree(&d, x, y).unwrap(),
                    crossing_degree(&d, y, x).unwrap()
                );
            }
        }
    }

    #[test]
    fn multiset_sequences() {
        let d = abc();
        let a = StrandLabel::plain(&d, 0).unwrap();
        let b = StrandLabel::plain(&d, 1).unwrap();
        let nu = SequenceClass::new(vec![a, a, b]).unwrap();
        let seqs = nu.sequences();
        assert_eq!(seqs.len(), 3);
        assert_eq!(nu.weight().get(&0), Some(&2));
    }
}
