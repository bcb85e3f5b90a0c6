//! Linear combinations of free-algebra words over Q(q).

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::Datum;
use crate::scalar::RatFunc;

use super::word::{FreeWord, GenIndex, Weight};
use super::UminusError;

/// An element of the free algebra: finitely many words with rational-function
/// coefficients. Zero coefficients are never stored. Elements need not be
/// weight-homogeneous; [`UElement::weight`] reports the common weight when
/// one exists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UElement {
    terms: BTreeMap<FreeWord, RatFunc>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one() -> Self {
        UElement::from_word(FreeWord::empty())
    }

    pub fn from_word(word: FreeWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(word, RatFunc::one());
        UElement { terms }
    }

    pub fn generator(g: GenIndex) -> Self {
        Self::from_word(FreeWord::letter(g))
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (FreeWord, RatFunc)>) -> Self {
        let mut out = UElement::zero();
        for (word, coeff) in pairs {
            out.add_term(word, coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &FreeWord) -> RatFunc {
        self.terms.get(word).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, word: FreeWord, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (word, coeff) in &other.terms {
            out.add_term(word.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (word, coeff) in &other.terms {
            out.add_term(word.clone(), -coeff);
        }
        out
    }

    pub fn scaled(&self, factor: &RatFunc) -> UElement {
        if factor.is_zero() {
            return UElement::zero();
        }
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect();
        UElement { terms }
    }

    /// Free product: concatenation of words, bilinear.
    pub fn mul(&self, other: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (wl, cl) in &self.terms {
            for (wr, cr) in &other.terms {
                out.add_term(wl.concat(wr), cl * cr);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> UElement {
        let mut out = UElement::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The common weight of all words, if the element is homogeneous.
    /// Zero reports weight `None`.
    pub fn weight(&self) -> Option<Weight> {
        let mut iter = self.terms.keys();
        let first = iter.next()?.weight();
        if iter.all(|w| w.weight() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Bar involution: conjugates every coefficient by q -> q^-1; fixes the
    /// generators, hence the words.
    pub fn bar(&self) -> UElement {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect();
        UElement { terms }
    }

    /// Star anti-involution: reverses every word, fixes coefficients.
    pub fn star(&self) -> UElement {
        let mut out = UElement::zero();
        for (w, c) in &self.terms {
            out.add_term(w.reversed(), c.clone());
        }
        out
    }

    pub fn display<'a>(&self, datum: &'a Datum) -> UElementDisplay<'a, '_> {
        UElementDisplay { datum, elem: self }
    }
}

pub struct UElementDisplay<'a, 'b> {
    datum: &'a Datum,
    elem: &'b UElement,
}

impl fmt::Display for UElementDisplay<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (k, (word, coeff)) in self.elem.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}]", coeff)?;
            if !word.is_empty() {
                write!(f, " {}", word.display(self.datum))?;
            }
        }
        Ok(())
    }
}

/// Divided power F_i^(n) = F_i^n / [n]_i! for a real index i, expanded
/// eagerly into the single word F_i...F_i.
pub fn divided_power(datum: &Datum, index: usize, n: u32) -> Result<UElement, UminusError> {
    let g = GenIndex::new(datum, index, 1)?;
    if !datum.is_real(index) {
        return Err(UminusError::BadGenerator(format!(
            "divided powers require a real index, got {}",
            datum.name(index)
        )));
    }
    let fact = crate::scalar::qfact(n, datum.r(index)).map_err(UminusError::Scalar)?;
    let inv = RatFunc::from_laurent(fact).inverse().expect("q-factorial is nonzero");
    Ok(UElement::generator(g).pow(n).scaled(&inv))
}

/// The quantum Serre element sum_{r+s=1-l a_ij} (-1)^r F_i^(r) F_jl F_i^(s)
/// for a real index i and a letter (j, l) with j != i. Lies in the radical
/// of the bilinear form.
pub fn serre_element(datum: &Datum, i: usize, j: GenIndex) -> Result<UElement, UminusError> {
    if !datum.is_real(i) {
        return Err(UminusError::BadGenerator(format!(
            "Serre elements require a real outer index, got {}",
            datum.name(i)
        )));
    }
    if i == j.index {
        return Err(UminusError::BadGenerator(
            "Serre element is undefined for equal indices".into(),
        ));
    }
    let bound = 1 + i64::from(j.mult) * (-datum.a(i, j.index));
    let bound = u32::try_from(bound).expect("a_ij <= 0 so the bound is positive");
    let middle = UElement::generator(j);
    let mut out = UElement::zero();
    for r in 0..=bound {
        let s = bound - r;
        let term = divided_power(datum, i, r)?
            .mul(&middle)
            .mul(&divided_power(datum, i, s)?);
        let signed = if r % 2 == 0 { term } else { term.scaled(&-&RatFunc::one()) };
        out = out.add(&signed);
    }
    Ok(out)
}
