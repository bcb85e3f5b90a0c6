//! The negative half as a free algebra with coproduct and bilinear form.
//!
//! An [`Algebra`] value fixes the Borcherds-Cartan datum, the norm mode for
//! non-isotropic generators, and any norm overrides, and memoizes form
//! values per word pair. Equality in the quantum group is always the
//! radical test: x = y iff x - y pairs to zero against every word of the
//! shared weight.
//!
//! Norm modes for a non-isotropic index i:
//! - `Primitive` (default): the letters are the primitive generators b_{il},
//!   each with norm 1/(1 - q_i^2) and coproduct b (x) 1 + 1 (x) b.
//! - `Geometric`: the letters are F_{il} with the full coproduct
//!   sum q_(i)^{-mn} F_{im} (x) F_{in} and norms prod_{k<=l} 1/(1 - q^{2k})
//!   in plain q (torus-equivariant point counts of the Jordan-type fibers).

use std::collections::HashMap;
use std::sync::Mutex;

use crate::cartan::{Datum, IndexType, NormOverrides};
use crate::linalg;
use crate::scalar::{RatFunc, TruncSeries};

use super::element::UElement;
use super::tensor::TensorElement;
use super::word::{words_of_weight, FreeWord, GenIndex, Weight};
use super::UminusError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMode {
    Primitive,
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiDirection {
    /// Words whose non-isotropic letters denote b's, rewritten into F-words.
    BToF,
    /// F-words rewritten into b-words.
    FToB,
}

#[derive(Debug, Default)]
struct FormMemo {
    right_split: HashMap<(FreeWord, FreeWord), RatFunc>,
    left_split: HashMap<(FreeWord, FreeWord), RatFunc>,
    primitive: HashMap<(usize, u32), UElement>,
}

/// The free algebra on the generator alphabet together with its coproduct
/// and bilinear form.
pub struct Algebra {
    datum: Datum,
    mode: NormMode,
    overrides: NormOverrides,
    memo: Mutex<FormMemo>,
}

impl Algebra {
    pub fn new(datum: Datum, mode: NormMode, overrides: NormOverrides) -> Result<Self, UminusError> {
        let algebra = Algebra { datum, mode, overrides, memo: Mutex::new(FormMemo::default()) };
        algebra.validate_overrides()?;
        Ok(algebra)
    }

    /// Norm values with no overrides.
    pub fn standard(datum: Datum, mode: NormMode) -> Self {
        Self::new(datum, mode, NormOverrides::default()).expect("no overrides to validate")
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    pub fn mode(&self) -> NormMode {
        self.mode
    }

    /// Every generator norm must be 1 + O(q) as a power series.
    fn validate_overrides(&self) -> Result<(), UminusError> {
        for ((index, mult), value) in self.overrides.entries() {
            let series = TruncSeries::expand(value, 0).map_err(|_| {
                UminusError::Mode(format!(
                    "norm override for ({}, {mult}) has a pole at q = 0",
                    self.datum.name(index)
                ))
            })?;
            if series.coeff(0) != num::One::one() {
                return Err(UminusError::Mode(format!(
                    "norm override for ({}, {mult}) is not 1 + O(q)",
                    self.datum.name(index)
                )));
            }
        }
        Ok(())
    }

    /// The generator norm c_{il} = {g_{il}, g_{il}}.
    pub fn norm(&self, g: GenIndex) -> Result<RatFunc, UminusError> {
        if let Some(value) = self.overrides.get(g.index, g.mult) {
            return Ok(value.clone());
        }
        let r = self.datum.r(g.index);
        let value = match self.datum.index_type(g.index) {
            IndexType::Real => {
                if g.mult != 1 {
                    return Err(UminusError::BadGenerator(format!(
                        "real index {} has no generator of multiplicity {}",
                        self.datum.name(g.index),
                        g.mult
                    )));
                }
                RatFunc::inv_one_minus_q_pow(2 * r)
            }
            IndexType::Isotropic => {
                let mut acc = RatFunc::one();
                for k in 1..=i64::from(g.mult) {
                    acc = &acc * &RatFunc::inv_one_minus_q_pow(2 * k * r);
                }
                acc
            }
            IndexType::NonIsotropic => match self.mode {
                NormMode::Primitive => RatFunc::inv_one_minus_q_pow(2 * r),
                NormMode::Geometric => {
                    let mut acc = RatFunc::one();
                    for k in 1..=i64::from(g.mult) {
                        acc = &acc * &RatFunc::inv_one_minus_q_pow(2 * k);
                    }
                    acc
                }
            },
        };
        Ok(value)
    }

    /// Coproduct of a single letter.
    pub fn coproduct_letter(&self, g: GenIndex) -> TensorElement {
        let primitive = self.datum.index_type(g.index) == IndexType::NonIsotropic
            && self.mode == NormMode::Primitive;
        if primitive {
            let w = FreeWord::letter(g);
            return TensorElement::from_pair(w.clone(), FreeWord::empty())
                .add(&TensorElement::from_pair(FreeWord::empty(), w));
        }
        // Full coproduct: sum over splits m + n = l with twist q_(i)^{-mn}.
        let round = self.datum.q_round_exp(g.index);
        let mut out = TensorElement::zero();
        for m in 0..=g.mult {
            let n = g.mult - m;
            let left = if m == 0 {
                FreeWord::empty()
            } else {
                FreeWord::letter(GenIndex { index: g.index, mult: m })
            };
            let right = if n == 0 {
                FreeWord::empty()
            } else {
                FreeWord::letter(GenIndex { index: g.index, mult: n })
            };
            let twist = -round * i64::from(m) * i64::from(n);
            out.add_term(left, right, RatFunc::q_pow(twist));
        }
        out
    }

    /// Coproduct of an element, extended multiplicatively along every word
    /// with the twisted tensor product.
    pub fn coproduct(&self, x: &UElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (word, coeff) in x.terms() {
            let mut acc = TensorElement::one();
            for &letter in word.letters() {
                acc = acc.mul(&self.coproduct_letter(letter), &self.datum);
            }
            out = out.add(&acc.scaled(coeff));
        }
        out
    }

    /// The bilinear form on word pairs, by the right-splitting recursion:
    /// {x, g w} = {rho(x), g (x) w} expanded componentwise. A lone letter on
    /// the right with a longer word on the left swaps arguments first
    /// (the form is symmetric), so the recursion always terminates.
    pub fn form_words(&self, x: &FreeWord, y: &FreeWord) -> RatFunc {
        if x.weight() != y.weight() {
            return RatFunc::zero();
        }
        if x.is_empty() {
            // Equal weights, so y is empty too: {1, 1} = 1.
            return RatFunc::one();
        }
        if y.len() == 1 && x.len() > 1 {
            return self.form_words(y, x);
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.memo.lock().unwrap().right_split.get(&key) {
            return v.clone();
        }
        let value = if y.len() == 1 {
            // Both sides single letters of equal weight.
            let gx = x.letters()[0];
            let gy = y.letters()[0];
            if gx == gy {
                self.norm(gx).expect("letters in words are valid")
            } else {
                RatFunc::zero()
            }
        } else {
            let (g, rest) = y.split_first().expect("y has at least two letters");
            let g_word = FreeWord::letter(g);
            let rho = self.coproduct(&UElement::from_word(x.clone()));
            let mut acc = RatFunc::zero();
            for ((t1, t2), c) in rho.terms() {
                if t1.weight() != g_word.weight() {
                    continue;
                }
                let a = self.form_words(t1, &g_word);
                if a.is_zero() {
                    continue;
                }
                let b = self.form_words(t2, &rest);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(&(c * &a) * &b);
            }
            acc
        };
        self.memo.lock().unwrap().right_split.insert(key, value.clone());
        value
    }

    /// Independent evaluation splitting the LEFT argument instead:
    /// {g w, y} = {g (x) w, rho(y)}. Used to cross-check [`Self::form_words`].
    pub fn form_words_left_split(&self, x: &FreeWord, y: &FreeWord) -> RatFunc {
        if x.weight() != y.weight() {
            return RatFunc::zero();
        }
        if x.is_empty() {
            return RatFunc::one();
        }
        if x.len() == 1 && y.len() > 1 {
            return self.form_words_left_split(y, x);
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.memo.lock().unwrap().left_split.get(&key) {
            return v.clone();
        }
        let value = if x.len() == 1 {
            let gx = x.letters()[0];
            let gy = y.letters()[0];
            if gx == gy {
                self.norm(gx).expect("letters in words are valid")
            } else {
                RatFunc::zero()
            }
        } else {
            let (g, rest) = x.split_first().expect("x has at least two letters");
            let g_word = FreeWord::letter(g);
            let rho = self.coproduct(&UElement::from_word(y.clone()));
            let mut acc = RatFunc::zero();
            for ((t1, t2), c) in rho.terms() {
                if t1.weight() != g_word.weight() {
                    continue;
                }
                let a = self.form_words_left_split(&g_word, t1);
                if a.is_zero() {
                    continue;
                }
                let b = self.form_words_left_split(&rest, t2);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(&(c * &a) * &b);
            }
            acc
        };
        self.memo.lock().unwrap().left_split.insert(key, value.clone());
        value
    }

    /// The bilinear form, extended bilinearly over terms.
    pub fn form(&self, x: &UElement, y: &UElement) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (wx, cx) in x.terms() {
            for (wy, cy) in y.terms() {
                let v = self.form_words(wx, wy);
                if !v.is_zero() {
                    acc = &acc + &(&(cx * cy) * &v);
                }
            }
        }
        acc
    }

    /// Pairing of tensors: {a (x) b, c (x) d} = {a, c}{b, d}, bilinear.
    pub fn tensor_form(&self, t: &TensorElement, left: &FreeWord, right: &FreeWord) -> RatFunc {
        let mut acc = RatFunc::zero();
        for ((t1, t2), c) in t.terms() {
            let a = self.form_words(t1, left);
            if a.is_zero() {
                continue;
            }
            let b = self.form_words(t2, right);
            if b.is_zero() {
                continue;
            }
            acc = &acc + &(&(c * &a) * &b);
        }
        acc
    }

    /// Gram matrix of the form on an ordered list of words.
    pub fn gram_matrix(&self, words: &[FreeWord]) -> Vec<Vec<RatFunc>> {
        words
            .iter()
            .map(|a| words.iter().map(|b| self.form_words(a, b)).collect())
            .collect()
    }

    /// All words of the weight of x, in the fixed enumeration order.
    pub fn weight_space_words(&self, weight: &Weight) -> Vec<FreeWord> {
        words_of_weight(&self.datum, weight)
    }

    /// True iff x pairs to zero with every word of its weight, i.e. x lies
    /// in the radical of the form. Zero passes trivially.
    pub fn is_radical(&self, x: &UElement) -> Result<bool, UminusError> {
        if x.is_zero() {
            return Ok(true);
        }
        let Some(weight) = x.weight() else {
            return Err(UminusError::WeightMismatch(
                "radical test requires a homogeneous element".into(),
            ));
        };
        for word in self.weight_space_words(&weight) {
            if !self.form(x, &UElement::from_word(word)).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality in the quantum group: the difference lies in the radical.
    pub fn equal_mod_radical(&self, x: &UElement, y: &UElement) -> Result<bool, UminusError> {
        self.is_radical(&x.sub(y))
    }

    /// True iff the tensor pairs to zero against w (x) w' for all word pairs
    /// of the weights appearing in it.
    pub fn tensor_is_radical(&self, t: &TensorElement) -> bool {
        let mut weight_pairs: Vec<(Weight, Weight)> = Vec::new();
        for ((t1, t2), _) in t.terms() {
            let pair = (t1.weight(), t2.weight());
            if !weight_pairs.contains(&pair) {
                weight_pairs.push(pair);
            }
        }
        for (wl, wr) in weight_pairs {
            for a in self.weight_space_words(&wl) {
                for b in self.weight_space_words(&wr) {
                    if !self.tensor_form(t, &a, &b).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The primitive generator b_{il} for a non-isotropic index, expanded in
    /// F-words: the unique element F_{il} + (span of longer words) that is
    /// orthogonal to every word with at least two letters in its weight
    /// space. Verifies exact primitivity of the result.
    pub fn primitive_generator(&self, index: usize, mult: u32) -> Result<UElement, UminusError> {
        if self.mode != NormMode::Geometric {
            return Err(UminusError::Mode(
                "primitive generators need geometric norms (F-letter alphabet)".into(),
            ));
        }
        if self.datum.index_type(index) != IndexType::NonIsotropic {
            return Err(UminusError::BadGenerator(format!(
                "primitive generators exist for non-isotropic indices, got {}",
                self.datum.name(index)
            )));
        }
        if let Some(b) = self.memo.lock().unwrap().primitive.get(&(index, mult)) {
            return Ok(b.clone());
        }
        let top = GenIndex::new(&self.datum, index, mult)?;
        let weight = Weight::single(index, mult);
        let lower: Vec<FreeWord> = self
            .weight_space_words(&weight)
            .into_iter()
            .filter(|w| w.len() >= 2)
            .collect();
        let mut b = UElement::generator(top);
        if !lower.is_empty() {
            let gram = self.gram_matrix(&lower);
            let rhs: Vec<RatFunc> = lower
                .iter()
                .map(|w| -&self.form_words(&FreeWord::letter(top), w))
                .collect();
            let coeffs = linalg::solve(&gram, &rhs).ok_or_else(|| {
                UminusError::SingularGram(format!(
                    "Gram matrix at weight {mult}*{} is singular",
                    self.datum.name(index)
                ))
            })?;
            for (word, coeff) in lower.iter().zip(coeffs) {
                b.add_term(word.clone(), coeff);
            }
        }
        let defect = self
            .coproduct(&b)
            .sub(&TensorElement::outer(&b, &UElement::one()))
            .sub(&TensorElement::outer(&UElement::one(), &b));
        if !defect.is_zero() {
            return Err(UminusError::Internal(format!(
                "b({}, {mult}) failed exact primitivity",
                self.datum.name(index)
            )));
        }
        self.memo.lock().unwrap().primitive.insert((index, mult), b.clone());
        Ok(b)
    }

    /// The product b_{i,c_1} b_{i,c_2} ... for a composition c.
    pub fn primitive_product(&self, index: usize, parts: &[u32]) -> Result<UElement, UminusError> {
        let mut out = UElement::one();
        for &p in parts {
            out = out.mul(&self.primitive_generator(index, p)?);
        }
        Ok(out)
    }

    /// F_{il} expanded in the b-alphabet, by induction on l: invert the
    /// triangular system b_{il} = F_{il} + (terms in lower F's).
    fn f_in_b(&self, index: usize, mult: u32, memo: &mut HashMap<u32, UElement>) -> Result<UElement, UminusError> {
        if let Some(v) = memo.get(&mult) {
            return Ok(v.clone());
        }
        let b_expansion = self.primitive_generator(index, mult)?;
        // F_{il} = b_{il} - (lower words of the expansion, re-expressed
        // in b's letter by letter).
        let top = FreeWord::letter(GenIndex { index, mult });
        let mut out = UElement::generator(GenIndex { index, mult });
        for (word, coeff) in b_expansion.terms() {
            if *word == top {
                continue;
            }
            let mut converted = UElement::one();
            for &letter in word.letters() {
                let piece = self.f_in_b(index, letter.mult, memo)?;
                converted = converted.mul(&piece);
            }
            out = out.sub(&converted.scaled(coeff));
        }
        memo.insert(mult, out.clone());
        Ok(out)
    }

    /// Change of basis along the automorphism sending b_{il} to F_{il}:
    /// substitutes every non-isotropic letter by its expansion in the other
    /// alphabet. Needs geometric norms for the expansions.
    pub fn change_basis_psi(&self, x: &UElement, direction: PsiDirection) -> Result<UElement, UminusError> {
        if self.mode != NormMode::Geometric {
            return Err(UminusError::Mode(
                "basis change needs geometric norms for the primitive expansions".into(),
            ));
        }
        let mut f_memos: HashMap<usize, HashMap<u32, UElement>> = HashMap::new();
        let mut out = UElement::zero();
        for (word, coeff) in x.terms() {
            let mut acc = UElement::one();
            for &letter in word.letters() {
                let replaced = if self.datum.index_type(letter.index) == IndexType::NonIsotropic {
                    match direction {
                        PsiDirection::BToF => self.primitive_generator(letter.index, letter.mult)?,
                        PsiDirection::FToB => {
                            let memo = f_memos.entry(letter.index).or_default();
                            self.f_in_b(letter.index, letter.mult, memo)?
                        }
                    }
                } else {
                    UElement::generator(letter)
                };
                acc = acc.mul(&replaced);
            }
            out = out.add(&acc.scaled(coeff));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod test {
    use super::*;
    use crate::cartan::CartanDatum;
    use crate::scalar::LaurentPoly;
    use crate::uminus::element::serre_element;

    fn abc() -> Datum {
        CartanDatum::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![2, -1, -1], vec![-1, 0, 0], vec![-1, 0, -2]],
            vec![1, 1, 1],
        )
        .validate()
        .unwrap()
    }

    fn one_vertex(a: i64, r: i64) -> Datum {
        CartanDatum::new(vec!["c".into()], vec![vec![a]], vec![r]).validate().unwrap()
    }

    fn inv_prod(exps: &[i64]) -> RatFunc {
        exps.iter().fold(RatFunc::one(), |acc, &k| &acc * &RatFunc::inv_one_minus_q_pow(k))
    }

    #[test]
    fn generator_norms() {
        let alg = Algebra::standard(abc(), NormMode::Primitive);
        let real = GenIndex { index: 0, mult: 1 };
        assert_eq!(alg.norm(real).unwrap(), inv_prod(&[2]));
        let iso3 = GenIndex { index: 1, mult: 3 };
        assert_eq!(alg.norm(iso3).unwrap(), inv_prod(&[2, 4, 6]));
        let neg2 = GenIndex { index: 2, mult: 2 };
        assert_eq!(alg.norm(neg2).unwrap(), inv_prod(&[2]));
        let geo = Algebra::standard(abc(), NormMode::Geometric);
        assert_eq!(geo.norm(neg2).unwrap(), inv_prod(&[2, 4]));
        let r2 = CartanDatum::new(vec!["x".into()], vec![vec![0]], vec![2]).validate().unwrap();
        let alg_r2 = Algebra::standard(r2, NormMode::Primitive);
        assert_eq!(alg_r2.norm(GenIndex { index: 0, mult: 2 }).unwrap(), inv_prod(&[4, 8]));
    }

    #[test]
    fn coproduct_of_letters() {
        let iso = Algebra::standard(one_vertex(0, 1), NormMode::Primitive);
        let f2 = GenIndex { index: 0, mult: 2 };
        let rho = iso.coproduct_letter(f2);
        let w2 = FreeWord::letter(f2);
        let w1 = FreeWord::letter(GenIndex { index: 0, mult: 1 });
        assert_eq!(rho.num_terms(), 3);
        assert_eq!(rho.coeff(&w2, &FreeWord::empty()), RatFunc::one());
        assert_eq!(rho.coeff(&w1, &w1), RatFunc::one());
        // Non-isotropic, a_ii = -2, r = 1: q_(i) = q^{-1}, so the middle
        // coefficient is q_(i)^{-1} = q.
        let geo = Algebra::standard(one_vertex(-2, 1), NormMode::Geometric);
        let rho_g = geo.coproduct_letter(f2);
        assert_eq!(rho_g.coeff(&w1, &w1), RatFunc::q_pow(1));
        // Primitive mode: two terms only.
        let prim = Algebra::standard(one_vertex(-2, 1), NormMode::Primitive);
        assert_eq!(prim.coproduct_letter(f2).num_terms(), 2);
    }

    #[test]
    fn coproduct_of_squares() {
        // rho(F^2) = F^2 (x) 1 + (1 + q^{-i.i}) F (x) F + 1 (x) F^2.
        let alg = Algebra::standard(abc(), NormMode::Primitive);
        let fa = UElement::generator(GenIndex { index: 0, mult: 1 });
        let rho = alg.coproduct(&fa.mul(&fa));
        let w = FreeWord::letter(GenIndex { index: 0, mult: 1 });
        let cross = rho.coeff(&w, &w);
        let expected = RatFunc::from_laurent(&LaurentPoly::one() + &LaurentPoly::q_pow(-2));
        assert_eq!(cross, expected);
    }

    #[test]
    fn form_values_match_norm_table() {
        let alg = Algebra::standard(abc(), NormMode::Primitive);
        let fa = UElement::generator(GenIndex { index: 0, mult: 1 });
        assert_eq!(alg.form(&fa, &fa), inv_prod(&[2]));
        for l in 1..=4u32 {
            let fl = UElement::generator(GenIndex { index: 1, mult: l });
            let exps: Vec<i64> = (1..=i64::from(l)).map(|k| 2 * k).collect();
            assert_eq!(alg.form(&fl, &fl), inv_prod(&exps));
        }
        // {x, y * 1} = {x, y} and distinct letters are orthogonal.
        let fb = UElement::generator(GenIndex { index: 1, mult: 1 });
        assert!(alg.form(&fa, &fb).is_zero());
        assert_eq!(alg.form(&fa, &fa.mul(&UElement::one())), inv_prod(&[2]));
        assert_eq!(alg.form(&UElement::one(), &UElement::one()), RatFunc::one());
    }

    #[test]
    fn gram_of_isotropic_weight_two() {
        let alg = Algebra::standard(one_vertex(0, 1), NormMode::Primitive);
        let words = alg.weight_space_words(&Weight::single(0, 2));
        assert_eq!(words.len(), 2);
        let gram = alg.gram_matrix(&words);
        assert_eq!(gram[0][0], inv_prod(&[2, 4]));
        assert_eq!(gram[0][1], inv_prod(&[2, 2]));
        assert_eq!(gram[1][0], inv_prod(&[2, 2]));
        assert_eq!(gram[1][1], &RatFunc::from_int(2) * &inv_prod(&[2, 2]));
        // {F1^2, F1^2} for a real vertex: (1 + q^{-2})/(1 - q^2)^2.
        let real = Algebra::standard(abc(), NormMode::Primitive);
        let fa = UElement::generator(GenIndex { index: 0, mult: 1 });
        let sq = fa.mul(&fa);
        let expected = &RatFunc::from_laurent(&LaurentPoly::one() + &LaurentPoly::q_pow(-2))
            * &inv_prod(&[2, 2]);
        assert_eq!(real.form(&sq, &sq), expected);
    }

    #[test]
    fn form_is_symmetric_and_split_independent() {
        let alg = Algebra::standard(abc(), NormMode::Primitive);
        for weight in crate::uminus::weights_up_to_height(alg.datum(), 3) {
            let words = alg.weight_space_words(&weight);
            for a in &words {
                for b in &words {
                    let rs = alg.form_words(a, b);
                    assert_eq!(rs, alg.form_words(b, a), "symmetry at {weight:?}");
                    assert_eq!(rs, alg.form_words_left_split(a, b), "split agreement");
                }
            }
        }
    }

    #[test]
    fn serre_elements_lie_in_the_radical() {
        let alg = Algebra::standard(abc(), NormMode::Primitive);
        // a real against isotropic (b,1) and (b,2); a_ab = -1.
        for l in 1..=2u32 {
            let s = serre_element(alg.datum(), 0, GenIndex { index: 1, mult: l }).unwrap();
            assert!(alg.is_radical(&s).unwrap(), "Serre at (b,{l})");
            assert!(!s.is_zero());
        }
        // Commutation for an orthogonal pair: a_bc = 0.
        let fb = UElement::generator(GenIndex { index: 1, mult: 1 });
        let fc = UElement::generator(GenIndex { index: 2, mult: 1 });
        let comm = fb.mul(&fc).sub(&fc.mul(&fb));
        assert!(alg.is_radical(&comm).unwrap());
        assert!(alg.equal_mod_radical(&fb.mul(&fc), &fc.mul(&fb)).unwrap());
        // A non-relation does not slip through.
        let fa = UElement::generator(GenIndex { index: 0, mult: 1 });
        let not_comm = fa.mul(&fb).sub(&fb.mul(&fa));
        assert!(!alg.is_radical(&not_comm).unwrap());
    }

    #[test]
    fn primitive_generators_in_geometric_mode() {
        let datum = one_vertex(-2, 1);
        let alg = Algebra::standard(datum.clone(), NormMode::Geometric);
        // b_1 = F_1.
        let b1 = alg.primitive_generator(0, 1).unwrap();
        assert_eq!(b1, UElement::generator(GenIndex { index: 0, mult: 1 }));
        // b_2 = F_2 - q/(1+q^2) F_1^2.
        let b2 = alg.primitive_generator(0, 2).unwrap();
        let f1 = UElement::generator(GenIndex { index: 0, mult: 1 });
        let f2 = UElement::generator(GenIndex { index: 0, mult: 2 });
        let coeff = RatFunc::new(
            -&LaurentPoly::q_pow(1),
            &LaurentPoly::one() + &LaurentPoly::q_pow(2),
        )
        .unwrap();
        let expected = f2.add(&f1.mul(&f1).scaled(&coeff));
        assert_eq!(b2, expected);
        // Coefficients are bar-invariant for l <= 4.
        for l in 1..=4u32 {
            let b = alg.primitive_generator(0, l).unwrap();
            assert_eq!(b.bar(), b, "bar invariance at l = {l}");
        }
        // Wrong modes are rejected.
        let prim = Algebra::standard(datum, NormMode::Primitive);
        assert!(matches!(prim.primitive_generator(0, 2), Err(UminusError::Mode(_))));
        let real_alg = Algebra::standard(abc(), NormMode::Geometric);
        assert!(real_alg.primitive_generator(0, 1).is_err());
    }

    /// The norms {b_l, b_l} computed from the torus-equivariant F-norms, for
    /// l <= 3. They do NOT stay at 1/(1 - q^2): the product form
    /// 1/((1-q^2)(1+q^4)) already appears at l = 3.
    #[test]
    fn geometric_mode_primitive_norms_reported() {
        let alg = Algebra::standard(one_vertex(-2, 1), NormMode::Geometric);
        let values: Vec<RatFunc> = (1..=3)
            .map(|l| {
                let b = alg.primitive_generator(0, l).unwrap();
                alg.form(&b, &b)
            })
            .collect();
        assert_eq!(values[0], inv_prod(&[2]));
        assert_eq!(values[1], inv_prod(&[4]));
        let one_plus_q4 = &LaurentPoly::one() + &LaurentPoly::q_pow(4);
        let expected3 = &inv_prod(&[2])
            * &RatFunc::new(LaurentPoly::one(), one_plus_q4).unwrap();
        assert_eq!(values[2], expected3);
    }

    #[test]
    fn primitive_products_separate_partitions() {
        let alg = Algebra::standard(one_vertex(-2, 1), NormMode::Geometric);
        let b21 = alg.primitive_product(0, &[2, 1]).unwrap();
        let b12 = alg.primitive_product(0, &[1, 2]).unwrap();
        let b3 = alg.primitive_product(0, &[3]).unwrap();
        assert!(alg.form(&b21, &b3).is_zero());
        assert!(alg.form(&b12, &b3).is_zero());
        // Same partition: generally nonzero.
        assert!(!alg.form(&b21, &b12).is_zero());
    }

    #[test]
    fn psi_round_trip() {
        let datum = CartanDatum::new(
            vec!["a".into(), "c".into()],
            vec![vec![2, -1], vec![-1, -2]],
            vec![1, 1],
        )
        .validate()
        .unwrap();
        let alg = Algebra::standard(datum.clone(), NormMode::Geometric);
        // Psi fixes real letters.
        let fa = UElement::generator(GenIndex { index: 0, mult: 1 });
        assert_eq!(alg.change_basis_psi(&fa, PsiDirection::BToF).unwrap(), fa);
        // Round trips through both alphabets on a mixed element.
        let c2 = UElement::generator(GenIndex { index: 1, mult: 2 });
        let c1 = UElement::generator(GenIndex { index: 1, mult: 1 });
        let x = fa.mul(&c2).add(&c1.mul(&c1).scaled(&RatFunc::q_pow(3)));
        let to_f = alg.change_basis_psi(&x, PsiDirection::BToF).unwrap();
        let back = alg.change_basis_psi(&to_f, PsiDirection::FToB).unwrap();
        assert_eq!(back, x);
        let to_b = alg.change_basis_psi(&x, PsiDirection::FToB).unwrap();
        let forward = alg.change_basis_psi(&to_b, PsiDirection::BToF).unwrap();
        assert_eq!(forward, x);
        // Primitive-mode algebras cannot expand.
        let prim = Algebra::standard(datum, NormMode::Primitive);
        assert!(prim.change_basis_psi(&x, PsiDirection::BToF).is_err());
    }

    #[test]
    fn hopf_compatibility() {
        // {x, yz} = {rho(x), y (x) z} with the tensor form, for word triples.
        let alg = Algebra::standard(abc(), NormMode::Primitive);
        let fa = FreeWord::letter(GenIndex { index: 0, mult: 1 });
        let fb = FreeWord::letter(GenIndex { index: 1, mult: 1 });
        let fb2 = FreeWord::letter(GenIndex { index: 1, mult: 2 });
        let cases = [
            (fa.concat(&fb), fa.clone(), fb.clone()),
            (fb2.concat(&fa), fa.concat(&fb), fb.clone()),
            (fb.concat(&fb), fb.clone(), fb.clone()),
        ];
        for (x, y, z) in cases {
            let lhs = alg.form_words(&x, &y.concat(&z));
            let rho = alg.coproduct(&UElement::from_word(x));
            let rhs = alg.tensor_form(&rho, &y, &z);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn override_validation() {
        let datum = one_vertex(-2, 1);
        let mut bad = NormOverrides::default();
        bad.insert(0, 1, RatFunc::q_pow(1));
        assert!(matches!(
            Algebra::new(datum.clone(), NormMode::Primitive, bad),
            Err(UminusError::Mode(_))
        ));
        let mut good = NormOverrides::default();
        good.insert(0, 2, inv_prod(&[6]));
        let alg = Algebra::new(datum, NormMode::Primitive, good).unwrap();
        assert_eq!(alg.norm(GenIndex { index: 0, mult: 2 }).unwrap(), inv_prod(&[6]));
    }
}
