//! Graded dimensions: idempotent truncations, centers, projectives with
//! divided-power decorations, the Serre-relation projective identities,
//! and the Khovanov-Lauda pairing on its closed-form shapes.
//!
//! All exact values follow from the diagram basis: `1_j R(nu) 1_i` is free
//! over the polynomial part with one generator per permutation sending
//! `i` to `j`, of degree the sum of its crossing degrees.  Decorating a
//! sequence with symmetrizers restricts the sum to minimal coset
//! representatives, which are the permutations increasing on each block.

use std::collections::BTreeMap;

use crate::cartan::{crossing_degree, AlphabetMode, Datum, IndexType, SequenceClass, StrandLabel};
use crate::klr::perm::Perm;
use crate::klr::KlrError;
use crate::scalar::{LaurentPoly, RatFunc, TruncSeries};
use crate::smash;

/// Crossing degrees for every strand pair of a fixed source sequence.
fn pair_degrees(datum: &Datum, source: &[StrandLabel]) -> Result<Vec<Vec<i64>>, KlrError> {
    let n = source.len();
    let mut deg = vec![vec![0i64; n]; n];
    for p in 0..n {
        for t in p + 1..n {
            deg[p][t] = crossing_degree(datum, &source[p], &source[t])?;
        }
    }
    Ok(deg)
}

fn inversion_degree(perm: &Perm, deg: &[Vec<i64>]) -> i64 {
    perm.inversions().iter().map(|&(p, t)| deg[p][t]).sum()
}

/// Product over the strands of `1/(1 - q^{deg x_k})`.
fn polynomial_part(datum: &Datum, strands: &[StrandLabel]) -> RatFunc {
    let mut out = RatFunc::one();
    for label in strands {
        out = &out * &RatFunc::inv_one_minus_q_pow(label.dot_degree(datum));
    }
    out
}

/// Graded dimension of `1_target R(nu) 1_source`: zero unless `target`
/// rearranges `source`, else the crossing-degree generating function of
/// the matching permutations times the polynomial part.
pub fn graded_dim(
    datum: &Datum,
    source: &[StrandLabel],
    target: &[StrandLabel],
) -> Result<RatFunc, KlrError> {
    if source.len() != target.len() {
        return Ok(RatFunc::zero());
    }
    let mut sorted_src = source.to_vec();
    let mut sorted_tgt = target.to_vec();
    sorted_src.sort();
    sorted_tgt.sort();
    if sorted_src != sorted_tgt {
        return Ok(RatFunc::zero());
    }
    let deg = pair_degrees(datum, source)?;
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    for perm in Perm::all(source.len()) {
        if perm.act_seq(source) == target {
            *counts.entry(inversion_degree(&perm, &deg)).or_insert(0) += 1;
        }
    }
    let mut num = LaurentPoly::zero();
    for (d, c) in counts {
        num = &num + &LaurentPoly::from_int(c).shifted(d);
    }
    Ok(&RatFunc::from_laurent(num) * &polynomial_part(datum, source))
}

/// Graded dimension of the center of `R(nu)`: one symmetric-polynomial
/// factor per distinct strand label, in the label's dot degree.
pub fn center_graded_dim(datum: &Datum, class: &SequenceClass) -> RatFunc {
    let mut counts: BTreeMap<StrandLabel, i64> = BTreeMap::new();
    for label in class.labels() {
        *counts.entry(*label).or_insert(0) += 1;
    }
    let mut out = RatFunc::one();
    for (label, m) in counts {
        let step = label.dot_degree(datum);
        for c in 1..=m {
            out = &out * &RatFunc::inv_one_minus_q_pow(step * c);
        }
    }
    out
}

/// One block of a sequence with divided powers: a bare strand, a
/// divided-power block on a real index, or an averaging block on an
/// isotropic index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    Plain(StrandLabel),
    DividedReal { index: usize, n: u32 },
    AveragedIso { index: usize, n: u32 },
}

impl Block {
    fn strand_count(&self) -> usize {
        match self {
            Block::Plain(_) => 1,
            Block::DividedReal { n, .. } | Block::AveragedIso { n, .. } => *n as usize,
        }
    }
}

/// A sequence of blocks, defining a projective `P` with symmetrizer
/// idempotents on the decorated blocks and a compensating grading shift
/// on the divided-power ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedSeq {
    blocks: Vec<Block>,
}

impl DecoratedSeq {
    pub fn new(datum: &Datum, blocks: Vec<Block>) -> Result<Self, KlrError> {
        for block in &blocks {
            match *block {
                Block::Plain(_) => {}
                Block::DividedReal { index, .. } => {
                    if datum.index_type(index) != IndexType::Real {
                        return Err(KlrError::UnsupportedShape(format!(
                            "divided-power block needs a real index, got {}",
                            datum.name(index)
                        )));
                    }
                }
                Block::AveragedIso { index, .. } => {
                    if datum.index_type(index) != IndexType::Isotropic {
                        return Err(KlrError::UnsupportedShape(format!(
                            "averaging block needs an isotropic index, got {}",
                            datum.name(index)
                        )));
                    }
                }
            }
        }
        Ok(DecoratedSeq { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Underlying strand sequence, expanding each block.
    pub fn strands(&self, datum: &Datum) -> Result<Vec<StrandLabel>, KlrError> {
        let mut out = Vec::new();
        for block in &self.blocks {
            match *block {
                Block::Plain(label) => out.push(label),
                Block::DividedReal { index, n } | Block::AveragedIso { index, n } => {
                    for _ in 0..n {
                        out.push(StrandLabel::plain(datum, index)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Start position and length of each block in the strand sequence.
    fn spans(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for block in &self.blocks {
            let len = block.strand_count();
            out.push((start, len));
            start += len;
        }
        out
    }

    /// Grading shift compensating the divided-power idempotents.
    pub fn shift(&self, datum: &Datum) -> i64 {
        self.blocks
            .iter()
            .map(|block| match *block {
                Block::DividedReal { index, n } => {
                    let n = n as i64;
                    n * (n - 1) / 2 * datum.r(index)
                }
                _ => 0,
            })
            .sum()
    }
}

/// Graded dimension of the projective attached to a decorated sequence:
/// the crossing-degree generating function over permutations increasing
/// on every decorated block, times the polynomial part, shifted down by
/// the divided-power compensation.
pub fn projective_dim(datum: &Datum, seq: &DecoratedSeq) -> Result<RatFunc, KlrError> {
    let strands = seq.strands(datum)?;
    let deg = pair_degrees(datum, &strands)?;
    let spans = seq.spans();
    let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
    'perm: for perm in Perm::all(strands.len()) {
        for &(start, len) in &spans {
            for p in start..start + len.saturating_sub(1) {
                if perm.image(p) > perm.image(p + 1) {
                    continue 'perm;
                }
            }
        }
        *counts.entry(inversion_degree(&perm, &deg)).or_insert(0) += 1;
    }
    let mut num = LaurentPoly::zero();
    for (d, c) in counts {
        num = &num + &LaurentPoly::from_int(c).shifted(d);
    }
    let sum = RatFunc::from_laurent(num).shifted(-seq.shift(datum));
    Ok(&sum * &polynomial_part(datum, &strands))
}

/// Both sides of a projective isomorphism, compared by graded dimension.
#[derive(Debug, Clone)]
pub struct SerreProjectiveCheck {
    pub lhs: RatFunc,
    pub rhs: RatFunc,
}

impl SerreProjectiveCheck {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The middle block of the Serre-relation projectives for a companion
/// index `j` taken `n`-fold: plain strands for real `j`, one
/// multiplicity-`n` strand for non-isotropic `j`, an averaging block for
/// isotropic `j`.
fn companion_blocks(datum: &Datum, j: usize, n: u32) -> Result<Vec<Block>, KlrError> {
    Ok(match datum.index_type(j) {
        IndexType::Real => {
            let label = StrandLabel::plain(datum, j)?;
            (0..n).map(|_| Block::Plain(label)).collect()
        }
        IndexType::Isotropic => vec![Block::AveragedIso { index: j, n }],
        IndexType::NonIsotropic => vec![Block::Plain(StrandLabel::new(
            datum,
            j,
            n,
            AlphabetMode::Full,
        )?)],
    })
}

/// Alternating sum of divided-power projectives around a companion block:
/// with `m = 1 - n a_ij`, the even-count side
/// `⊕_c P(i^(2c) ĵ i^(m-2c))` must match the odd-count side
/// `⊕_c P(i^(2c+1) ĵ i^(m-2c-1))` in graded dimension.
pub fn serre_projective_check(
    datum: &Datum,
    i: usize,
    j: usize,
    n: u32,
) -> Result<SerreProjectiveCheck, KlrError> {
    if datum.index_type(i) != IndexType::Real {
        return Err(KlrError::UnsupportedShape(format!(
            "Serre projectives need a real outer index, got {}",
            datum.name(i)
        )));
    }
    if i == j {
        return Err(KlrError::UnsupportedShape(
            "Serre projectives need distinct indices".into(),
        ));
    }
    if n == 0 {
        return Err(KlrError::UnsupportedShape(
            "Serre projectives need n >= 1".into(),
        ));
    }
    let middle = companion_blocks(datum, j, n)?;
    let m = (1 - n as i64 * datum.a(i, j)) as u32;
    let side = |lows: &mut dyn Iterator<Item = u32>| -> Result<RatFunc, KlrError> {
        let mut total = RatFunc::zero();
        for low in lows {
            let mut blocks = vec![Block::DividedReal { index: i, n: low }];
            blocks.extend(middle.iter().cloned());
            blocks.push(Block::DividedReal { index: i, n: m - low });
            let seq = DecoratedSeq::new(datum, blocks)?;
            total = &total + &projective_dim(datum, &seq)?;
        }
        Ok(total)
    };
    let lhs = side(&mut (0..=m / 2).map(|c| 2 * c))?;
    let rhs = side(&mut (0..=(m - 1) / 2).map(|c| 2 * c + 1))?;
    Ok(SerreProjectiveCheck { lhs, rhs })
}

/// For two blocks on orthogonal indices (`a_ij = 0`), the projectives on
/// the two orders are isomorphic; compares their graded dimensions.
pub fn swap_check(datum: &Datum, a: &Block, b: &Block) -> Result<SerreProjectiveCheck, KlrError> {
    let index_of = |block: &Block| match *block {
        Block::Plain(label) => label.index(),
        Block::DividedReal { index, .. } | Block::AveragedIso { index, .. } => index,
    };
    let (i, j) = (index_of(a), index_of(b));
    if datum.a(i, j) != 0 {
        return Err(KlrError::UnsupportedShape(format!(
            "swap isomorphism needs orthogonal indices, got a({}, {}) = {}",
            datum.name(i),
            datum.name(j),
            datum.a(i, j)
        )));
    }
    let lhs = projective_dim(datum, &DecoratedSeq::new(datum, vec![a.clone(), b.clone()])?)?;
    let rhs = projective_dim(datum, &DecoratedSeq::new(datum, vec![b.clone(), a.clone()])?)?;
    Ok(SerreProjectiveCheck { lhs, rhs })
}

/// A projective class with a closed-form or series-computable pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingShape {
    /// `P` of a bare sequence.
    Plain(Vec<StrandLabel>),
    /// Divided power `P(i^(n))` on a real index.
    DividedReal { index: usize, n: u32 },
    /// `R(ni) e_λ` for an isotropic index, `λ` the averaging block sizes.
    AveragedIso { index: usize, blocks: Vec<u32> },
}

/// A pairing value: exact when a closed form exists, otherwise a series
/// truncated at the requested order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingValue {
    Exact(RatFunc),
    Series(TruncSeries),
}

/// Khovanov-Lauda pairing of two projective classes.  Shapes of unequal
/// weight pair to zero; mixing decoration kinds is unsupported.
pub fn kl_pairing(
    datum: &Datum,
    left: &PairingShape,
    right: &PairingShape,
    order: usize,
) -> Result<PairingValue, KlrError> {
    match (left, right) {
        (PairingShape::Plain(a), PairingShape::Plain(b)) => {
            Ok(PairingValue::Exact(graded_dim(datum, a, b)?))
        }
        (
            PairingShape::DividedReal { index: i, n },
            PairingShape::DividedReal { index: j, n: m },
        ) => {
            for idx in [*i, *j] {
                if datum.index_type(idx) != IndexType::Real {
                    return Err(KlrError::UnsupportedShape(format!(
                        "divided-power shape needs a real index, got {}",
                        datum.name(idx)
                    )));
                }
            }
            if i != j || n != m {
                return Ok(PairingValue::Exact(RatFunc::zero()));
            }
            let step = 2 * datum.r(*i);
            let mut out = RatFunc::one();
            for c in 1..=*n as i64 {
                out = &out * &RatFunc::inv_one_minus_q_pow(step * c);
            }
            Ok(PairingValue::Exact(out))
        }
        (
            PairingShape::AveragedIso { index: i, blocks: bl },
            PairingShape::AveragedIso { index: j, blocks: br },
        ) => {
            for idx in [*i, *j] {
                if datum.index_type(idx) != IndexType::Isotropic {
                    return Err(KlrError::UnsupportedShape(format!(
                        "averaging shape needs an isotropic index, got {}",
                        datum.name(idx)
                    )));
                }
            }
            let (nl, nr): (u32, u32) = (bl.iter().sum(), br.iter().sum());
            if i != j || nl != nr {
                return Ok(PairingValue::Exact(RatFunc::zero()));
            }
            Ok(PairingValue::Series(smash::sandwich_dim_series(
                datum.r(*i),
                bl,
                br,
                order,
            )))
        }
        _ => Err(KlrError::UnsupportedShape(
            "pairing of mixed decoration kinds has no supported form".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::abc_datum;
    use crate::scalar::qfact;

    fn sl3_datum() -> Datum {
        crate::cartan::CartanDatum::new(
            vec!["i".into(), "j".into()],
            vec![vec![2, -1], vec![-1, 2]],
            vec![1, 1],
        )
        .validate()
        .unwrap()
    }

    fn labels(datum: &Datum, spec: &[(usize, u32)]) -> Vec<StrandLabel> {
        spec.iter()
            .map(|&(i, m)| StrandLabel::new(datum, i, m, AlphabetMode::Full).unwrap())
            .collect()
    }

    #[test]
    fn empty_sequence_has_dimension_one() {
        let datum = abc_datum();
        assert_eq!(graded_dim(&datum, &[], &[]).unwrap(), RatFunc::one());
    }

    #[test]
    fn mismatched_weights_pair_to_zero() {
        let datum = abc_datum();
        let a = labels(&datum, &[(0, 1)]);
        let b = labels(&datum, &[(1, 1)]);
        assert!(graded_dim(&datum, &a, &b).unwrap().is_zero());
        let c1c1 = labels(&datum, &[(2, 1), (2, 1)]);
        let c2 = labels(&datum, &[(2, 2)]);
        assert!(graded_dim(&datum, &c1c1, &c2).unwrap().is_zero());
    }

    #[test]
    fn single_strand_norms() {
        let datum = abc_datum();
        for &(i, m) in &[(0, 1), (1, 1), (2, 1), (2, 3)] {
            let seq = labels(&datum, &[(i, m)]);
            assert_eq!(
                graded_dim(&datum, &seq, &seq).unwrap(),
                RatFunc::inv_one_minus_q_pow(2 * datum.r(i))
            );
        }
    }

    #[test]
    fn two_real_strands_match_frozen_value() {
        let datum = abc_datum();
        let seq = labels(&datum, &[(0, 1), (0, 1)]);
        let expected = &(&RatFunc::one() + &RatFunc::q_pow(-2))
            * &RatFunc::inv_one_minus_q_pow(2).pow(2).unwrap();
        assert_eq!(graded_dim(&datum, &seq, &seq).unwrap(), expected);
    }

    #[test]
    fn graded_dim_is_symmetric_and_orientation_free() {
        let datum = abc_datum();
        let reversed = datum.reversed_orientation();
        let s = labels(&datum, &[(0, 1), (2, 2), (0, 1)]);
        let t = labels(&datum, &[(2, 2), (0, 1), (0, 1)]);
        let forward = graded_dim(&datum, &s, &t).unwrap();
        assert_eq!(forward, graded_dim(&datum, &t, &s).unwrap());
        assert_eq!(forward, graded_dim(&reversed, &s, &t).unwrap());
    }

    #[test]
    fn center_dimensions_group_by_label() {
        let datum = abc_datum();
        let inv = RatFunc::inv_one_minus_q_pow;
        let mixed = SequenceClass::new(labels(&datum, &[(0, 1), (1, 1), (2, 2)])).unwrap();
        assert_eq!(
            center_graded_dim(&datum, &mixed),
            &(&inv(2) * &inv(2)) * &inv(2)
        );
        let aa = SequenceClass::new(labels(&datum, &[(0, 1), (0, 1)])).unwrap();
        assert_eq!(center_graded_dim(&datum, &aa), &inv(2) * &inv(4));
        // Equal index, distinct multiplicities: separate factors.
        let c1c2 = SequenceClass::new(labels(&datum, &[(2, 1), (2, 2)])).unwrap();
        assert_eq!(center_graded_dim(&datum, &c1c2), &inv(2) * &inv(2));
    }

    #[test]
    fn divided_power_norm_times_factorial_squared_is_plain_norm() {
        let datum = abc_datum();
        for n in 1..=4u32 {
            let seq = labels(&datum, &(0..n).map(|_| (0, 1)).collect::<Vec<_>>());
            let plain = graded_dim(&datum, &seq, &seq).unwrap();
            let divided = match kl_pairing(
                &datum,
                &PairingShape::DividedReal { index: 0, n },
                &PairingShape::DividedReal { index: 0, n },
                0,
            )
            .unwrap()
            {
                PairingValue::Exact(v) => v,
                _ => unreachable!(),
            };
            let fact = RatFunc::from_laurent(qfact(n, 1).unwrap());
            assert_eq!(plain, &(&fact * &fact) * &divided);
        }
    }

    #[test]
    fn projective_dim_of_plain_blocks_sums_truncations() {
        let datum = abc_datum();
        let seq = labels(&datum, &[(0, 1), (1, 1)]);
        let swapped = labels(&datum, &[(1, 1), (0, 1)]);
        let dec = DecoratedSeq::new(
            &datum,
            vec![Block::Plain(seq[0]), Block::Plain(seq[1])],
        )
        .unwrap();
        let total = &graded_dim(&datum, &seq, &seq).unwrap()
            + &graded_dim(&datum, &seq, &swapped).unwrap();
        assert_eq!(projective_dim(&datum, &dec).unwrap(), total);
    }

    #[test]
    fn divided_block_dim_is_shifted_polynomial_part() {
        let datum = abc_datum();
        let dec =
            DecoratedSeq::new(&datum, vec![Block::DividedReal { index: 0, n: 2 }]).unwrap();
        let expected = RatFunc::inv_one_minus_q_pow(2).pow(2).unwrap().shifted(-1);
        assert_eq!(projective_dim(&datum, &dec).unwrap(), expected);
    }

    #[test]
    fn serre_check_matches_frozen_rank_two_value() {
        let datum = sl3_datum();
        let check = serre_projective_check(&datum, 0, 1, 1).unwrap();
        assert!(check.ok());
        let expected = &RatFunc::from_laurent(
            &(&LaurentPoly::from_int(2).shifted(-1) + &LaurentPoly::from_int(2))
                + &LaurentPoly::from_int(2).shifted(1),
        ) * &RatFunc::inv_one_minus_q_pow(2).pow(3).unwrap();
        assert_eq!(check.lhs, expected);
        assert_eq!(check.rhs, expected);
    }

    #[test]
    fn serre_check_covers_all_companion_types() {
        let datum = abc_datum();
        for j in [1, 2] {
            for n in 1..=2u32 {
                let check = serre_projective_check(&datum, 0, j, n).unwrap();
                assert!(check.ok(), "failed for j = {j}, n = {n}");
            }
        }
        let sl3 = sl3_datum();
        for n in 1..=2u32 {
            let check = serre_projective_check(&sl3, 0, 1, n).unwrap();
            assert!(check.ok(), "failed for real companion, n = {n}");
        }
    }

    #[test]
    fn orthogonal_swap_has_equal_dimensions() {
        let datum = abc_datum();
        let b = StrandLabel::plain(&datum, 1).unwrap();
        let c2 = StrandLabel::new(&datum, 2, 2, AlphabetMode::Full).unwrap();
        let check = swap_check(&datum, &Block::Plain(b), &Block::Plain(c2)).unwrap();
        assert!(check.ok());
        let check = swap_check(
            &datum,
            &Block::AveragedIso { index: 1, n: 2 },
            &Block::Plain(c2),
        )
        .unwrap();
        assert!(check.ok());
        assert!(swap_check(
            &datum,
            &Block::Plain(StrandLabel::plain(&datum, 0).unwrap()),
            &Block::Plain(b)
        )
        .is_err());
    }

    /// Restriction coproduct identity: the pairing against a product is
    /// the sum over strand splittings, weighted by the crossing degrees
    /// of the separated pairs.
    #[test]
    fn pairing_against_product_factors_over_splittings() {
        let datum = abc_datum();
        let cases: Vec<(Vec<(usize, u32)>, Vec<(usize, u32)>, Vec<(usize, u32)>)> = vec![
            (vec![(0, 1), (0, 1)], vec![(0, 1)], vec![(0, 1)]),
            (vec![(0, 1), (1, 1)], vec![(1, 1)], vec![(0, 1)]),
            (vec![(1, 1), (1, 1)], vec![(1, 1)], vec![(1, 1)]),
            (
                vec![(0, 1), (1, 1), (0, 1)],
                vec![(0, 1), (1, 1)],
                vec![(0, 1)],
            ),
            (
                vec![(0, 1), (2, 2), (0, 1)],
                vec![(2, 2), (0, 1)],
                vec![(0, 1)],
            ),
        ];
        for (i_spec, j_spec, k_spec) in cases {
            let iseq = labels(&datum, &i_spec);
            let jseq = labels(&datum, &j_spec);
            let kseq = labels(&datum, &k_spec);
            let concat: Vec<_> = jseq.iter().chain(kseq.iter()).copied().collect();
            let lhs = graded_dim(&datum, &iseq, &concat).unwrap();
            let n = iseq.len();
            let mut rhs = RatFunc::zero();
            for mask in 0u32..1 << n {
                if (mask.count_ones() as usize) != jseq.len() {
                    continue;
                }
                let (mut left, mut right) = (Vec::new(), Vec::new());
                let mut cross = 0i64;
                for p in 0..n {
                    if mask & (1 << p) != 0 {
                        // Separated inverted pair: an earlier strand goes
                        // right while this one goes left.
                        for t in 0..p {
                            if mask & (1 << t) == 0 {
                                cross += crossing_degree(&datum, &iseq[t], &iseq[p]).unwrap();
                            }
                        }
                        left.push(iseq[p]);
                    } else {
                        right.push(iseq[p]);
                    }
                }
                let factor = &graded_dim(&datum, &left, &jseq).unwrap()
                    * &graded_dim(&datum, &right, &kseq).unwrap();
                rhs = &rhs + &factor.shifted(cross);
            }
            assert_eq!(lhs, rhs, "failed for {i_spec:?} | {j_spec:?} {k_spec:?}");
        }
    }

    #[test]
    fn averaged_pairing_matches_series_oracles() {
        let datum = abc_datum();
        let order = 13;
        let one_block = kl_pairing(
            &datum,
            &PairingShape::AveragedIso { index: 1, blocks: vec![1] },
            &PairingShape::AveragedIso { index: 1, blocks: vec![1] },
            order,
        )
        .unwrap();
        let expected =
            TruncSeries::expand(&RatFunc::inv_one_minus_q_pow(2), order).unwrap();
        assert_eq!(one_block, PairingValue::Series(expected));

        // Two fully-averaged isotropic strands: symmetric functions in
        // two degree-2 variables.
        let two_block = kl_pairing(
            &datum,
            &PairingShape::AveragedIso { index: 1, blocks: vec![2] },
            &PairingShape::AveragedIso { index: 1, blocks: vec![2] },
            order,
        )
        .unwrap();
        let expected = TruncSeries::expand(
            &(&RatFunc::inv_one_minus_q_pow(2) * &RatFunc::inv_one_minus_q_pow(4)),
            order,
        )
        .unwrap();
        assert_eq!(two_block, PairingValue::Series(expected));

        // Trivial blocks recover the bare idempotent truncation.
        let bare = kl_pairing(
            &datum,
            &PairingShape::AveragedIso { index: 1, blocks: vec![1, 1] },
            &PairingShape::AveragedIso { index: 1, blocks: vec![1, 1] },
            order,
        )
        .unwrap();
        let b = StrandLabel::plain(&datum, 1).unwrap();
        let full = graded_dim(&datum, &[b, b], &[b, b]).unwrap();
        assert_eq!(
            bare,
            PairingValue::Series(TruncSeries::expand(&full, order).unwrap())
        );
    }

    #[test]
    fn mixed_pairing_shapes_are_rejected() {
        let datum = abc_datum();
        let err = kl_pairing(
            &datum,
            &PairingShape::DividedReal { index: 0, n: 2 },
            &PairingShape::AveragedIso { index: 1, blocks: vec![2] },
            8,
        );
        assert!(err.is_err());
    }
}
