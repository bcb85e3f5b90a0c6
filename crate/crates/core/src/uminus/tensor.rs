//! The twisted tensor square of the free algebra.
//!
//! Multiplication follows (x1 (x) x2)(y1 (x) y2) = q^{-(|x2|,|y1|)}
//! x1 y1 (x) x2 y2, where (.,.) is the symmetric weight pairing. The
//! coproduct of the negative half lands here.

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::Datum;
use crate::scalar::RatFunc;

use super::element::UElement;
use super::word::FreeWord;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(FreeWord, FreeWord), RatFunc>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((FreeWord::empty(), FreeWord::empty()), RatFunc::one());
        TensorElement { terms }
    }

    pub fn from_pair(left: FreeWord, right: FreeWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((left, right), RatFunc::one());
        TensorElement { terms }
    }

    /// x (x) y for element arguments, bilinear.
    pub fn outer(x: &UElement, y: &UElement) -> Self {
        let mut out = TensorElement::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                out.add_term(wx.clone(), wy.clone(), cx * cy);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(FreeWord, FreeWord), &RatFunc)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, left: &FreeWord, right: &FreeWord) -> RatFunc {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, left: FreeWord, right: FreeWord, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), -c);
        }
        out
    }

    pub fn scaled(&self, factor: &RatFunc) -> TensorElement {
        if factor.is_zero() {
            return TensorElement::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c * factor))
            .collect();
        TensorElement { terms }
    }

    /// Twisted product; needs the datum for the weight pairing in the twist.
    pub fn mul(&self, other: &TensorElement, datum: &Datum) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((xl, xr), cx) in &self.terms {
            let xr_weight = xr.weight();
            for ((yl, yr), cy) in &other.terms {
                let twist = -xr_weight.pairing(&yl.weight(), datum);
                let coeff = &(cx * cy) * &RatFunc::q_pow(twist);
                out.add_term(xl.concat(yl), xr.concat(yr), coeff);
            }
        }
        out
    }

    pub fn display<'a>(&self, datum: &'a Datum) -> TensorElementDisplay<'a, '_> {
        TensorElementDisplay { datum, elem: self }
    }
}

pub struct TensorElementDisplay<'a, 'b> {
    datum: &'a Datum,
    elem: &'b TensorElement,
}

impl fmt::Display for TensorElementDisplay<'_, '_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (k, ((l, r), coeff)) in self.elem.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "[{}] {} (x) {}",
                coeff,
                l.display(self.datum),
                r.display(self.datum)
            )?;
        }
        Ok(())
    }
}
