//! Words in the generator alphabet of the negative half.
//!
//! The alphabet I^infty has one letter per real index and a family (i, l)
//! with l >= 1 for each isotropic or non-isotropic index. A word's weight is
//! the multiset sum of l * i over its letters; the bilinear form vanishes
//! across different weights, so all linear algebra happens weight by weight.
//!
//! Enumeration order inside a weight space is degree-lexicographic: fewer
//! letters first, then lexicographic on the letter sequence under the order
//! (index, multiplicity). This keeps Gram matrices deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{Datum, IndexType};

use super::UminusError;

/// One letter (i, l): generator l of index i. Real indices only carry l = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenIndex {
    pub index: usize,
    pub mult: u32,
}

impl GenIndex {
    pub fn new(datum: &Datum, index: usize, mult: u32) -> Result<Self, UminusError> {
        if index >= datum.len() {
            return Err(UminusError::BadGenerator(format!("index {index} out of range")));
        }
        if mult == 0 {
            return Err(UminusError::BadGenerator("generator multiplicity must be positive".into()));
        }
        if mult > 1 && datum.index_type(index) == IndexType::Real {
            return Err(UminusError::BadGenerator(format!(
                "real index {} has no generator of multiplicity {mult}",
                datum.name(index)
            )));
        }
        Ok(GenIndex { index, mult })
    }
}

/// Element of N[I]: index -> total multiplicity, no zero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BTreeMap<usize, u32>);

impl Weight {
    pub fn zero() -> Self {
        Weight(BTreeMap::new())
    }

    pub fn single(index: usize, mult: u32) -> Self {
        let mut map = BTreeMap::new();
        if mult > 0 {
            map.insert(index, mult);
        }
        Weight(map)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> u32 {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&i, &m)| (i, m))
    }

    pub fn add(&self, other: &Weight) -> Weight {
        let mut out = self.0.clone();
        for (&i, &m) in &other.0 {
            *out.entry(i).or_insert(0) += m;
        }
        Weight(out)
    }

    pub fn add_letter(&self, letter: GenIndex) -> Weight {
        let mut out = self.0.clone();
        *out.entry(letter.index).or_insert(0) += letter.mult;
        Weight(out)
    }

    /// Total height sum_i nu_i.
    pub fn height(&self) -> u32 {
        self.0.values().sum()
    }

    /// Symmetric pairing (mu, nu) = sum mu_i nu_j (i.j).
    pub fn pairing(&self, other: &Weight, datum: &Datum) -> i64 {
        let mut acc = 0;
        for (&i, &m) in &self.0 {
            for (&j, &n) in &other.0 {
                acc += i64::from(m) * i64::from(n) * datum.dot(i, j);
            }
        }
        acc
    }
}

/// A word in the free algebra; the empty word is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<GenIndex>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord { letters: Vec::new() }
    }

    pub fn letter(g: GenIndex) -> Self {
        FreeWord { letters: vec![g] }
    }

    pub fn from_letters(letters: Vec<GenIndex>) -> Self {
        FreeWord { letters }
    }

    pub fn letters(&self) -> &[GenIndex] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for &l in &self.letters {
            w = w.add_letter(l);
        }
        w
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    pub fn reversed(&self) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        FreeWord { letters }
    }

    /// First letter and the remaining word, when nonempty.
    pub fn split_first(&self) -> Option<(GenIndex, FreeWord)> {
        let (&first, rest) = self.letters.split_first()?;
        Some((first, FreeWord { letters: rest.to_vec() }))
    }

    /// Last letter and the preceding word, when nonempty.
    pub fn split_last(&self) -> Option<(FreeWord, GenIndex)> {
        let (&last, head) = self.letters.split_last()?;
        Some((FreeWord { letters: head.to_vec() }, last))
    }

    pub fn display<'a>(&self, datum: &'a Datum) -> FreeWordDisplay<'a, '_> {
        FreeWordDisplay { datum, word: self }
    }
}

/// Degree-lexicographic: length first, then letterwise (index, mult).
impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct FreeWordDisplay<'a, 'b> {
    datum: &'a Datum,
    word: &'b FreeWord,
}

impl fmt::Display for FreeWordDisplay<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.word.letters().iter().enumerate() {
            if k > 0 {
                write!(f, ".")?;
            }
            if l.mult == 1 {
                write!(f, "F({})", self.datum.name(l.index))?;
            } else {
                write!(f, "F({},{})", self.datum.name(l.index), l.mult)?;
            }
        }
        Ok(())
    }
}

/// Letters usable at an index: just (i,1) for real i, otherwise (i,l) for
/// every l up to the remaining budget.
fn letters_at(datum: &Datum, index: usize, budget: u32) -> Vec<GenIndex> {
    if budget == 0 {
        return Vec::new();
    }
    match datum.index_type(index) {
        IndexType::Real => vec![GenIndex { index, mult: 1 }],
        _ => (1..=budget).map(|mult| GenIndex { index, mult }).collect(),
    }
}

/// Every word of the given weight, sorted degree-lexicographically.
pub fn words_of_weight(datum: &Datum, weight: &Weight) -> Vec<FreeWord> {
    fn go(datum: &Datum, remaining: &Weight, prefix: &mut Vec<GenIndex>, out: &mut Vec<FreeWord>) {
        if remaining.is_zero() {
            out.push(FreeWord { letters: prefix.clone() });
            return;
        }
        for (index, budget) in remaining.entries().collect::<Vec<_>>() {
            for letter in letters_at(datum, index, budget) {
                let mut next = remaining.clone();
                let left = budget - letter.mult;
                if left == 0 {
                    next.0.remove(&index);
                } else {
                    next.0.insert(index, left);
                }
                prefix.push(letter);
                go(datum, &next, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(datum, weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every nonzero weight of height at most `bound`, ascending by (height,
/// entries).
pub fn weights_up_to_height(datum: &Datum, bound: u32) -> Vec<Weight> {
    fn go(datum: &Datum, index: usize, budget: u32, prefix: &mut BTreeMap<usize, u32>, out: &mut Vec<Weight>) {
        if index == datum.len() {
            if !prefix.is_empty() {
                out.push(Weight(prefix.clone()));
            }
            return;
        }
        go(datum, index + 1, budget, prefix, out);
        for m in 1..=budget {
            prefix.insert(index, m);
            go(datum, index + 1, budget - m, prefix, out);
        }
        prefix.remove(&index);
    }
    let mut out = Vec::new();
    go(datum, 0, bound, &mut BTreeMap::new(), &mut out);
    out.sort_by_key(|w| (w.height(), w.0.clone()));
    out
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
    fn letter_validation() {
        let d = abc();
        assert!(GenIndex::new(&d, 0, 1).is_ok());
        assert!(GenIndex::new(&d, 0, 2).is_err());
        assert!(GenIndex::new(&d, 1, 3).is_ok());
        assert!(GenIndex::new(&d, 2, 2).is_ok());
        assert!(GenIndex::new(&d, 3, 1).is_err());
        assert!(GenIndex::new(&d, 1, 0).is_err());
    }

    #[test]
    fn weights() {
        let d = abc();
        let g1 = GenIndex::new(&d, 1, 2).unwrap();
        let g2 = GenIndex::new(&d, 0, 1).unwrap();
        let w = FreeWord::from_letters(vec![g1, g2, g2]).weight();
        assert_eq!(w.get(1), 2);
        assert_eq!(w.get(0), 2);
        assert_eq!(w.height(), 4);
        // (2a + 2b, a) = 2*2*(a.a)/... = 2*(2) * 1 + 2*(-1) = 2.
        assert_eq!(w.pairing(&Weight::single(0, 1), &d), 2);
    }

    #[test]
    fn word_enumeration_is_deglex() {
        let d = abc();
        let w = Weight::single(1, 2);
        let words = words_of_weight(&d, &w);
        let shown: Vec<String> = words.iter().map(|x| x.display(&d).to_string()).collect();
        assert_eq!(shown, ["F(b,2)", "F(b).F(b)"]);
        // Mixed weight a + 2c.
        let w2 = Weight::single(0, 1).add(&Weight::single(2, 2));
        let words2 = words_of_weight(&d, &w2);
        let shown2: Vec<String> = words2.iter().map(|x| x.display(&d).to_string()).collect();
        assert_eq!(
            shown2,
            [
                "F(a).F(c,2)",
                "F(c,2).F(a)",
                "F(a).F(c).F(c)",
                "F(c).F(a).F(c)",
                "F(c).F(c).F(a)"
            ]
        );
    }

    #[test]
    fn weight_enumeration() {
        let d = abc();
        let ws = weights_up_to_height(&d, 2);
        // Height 1: a, b, c. Height 2: 2a, 2b, 2c, a+b, a+c, b+c.
        assert_eq!(ws.len(), 9);
        assert!(ws.iter().all(|w| w.height() <= 2 && !w.is_zero()));
        assert_eq!(ws[0], Weight::single(0, 1));
    }
}
