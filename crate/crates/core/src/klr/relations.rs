//! Exhaustive verification of the defining local relations in the
//! polynomial representation.
//!
//! Each check applies both sides of a relation, as operators built from
//! the generator actions, to every monomial of weighted degree at most a
//! bound in the relevant component, and compares exactly.  Checks for
//! different sequences are independent, so the sweep fans out over a
//! worker pool; `BOZEC_KLR_THREADS` caps the pool size and results are
//! reassembled in input order so reports are deterministic.

use serde::Serialize;

use crate::cartan::{AlphabetMode, Datum, IndexType, SequenceClass, StrandLabel};
use crate::klr::action::{monomials_up_to, PolyAction, PolyVec};
use crate::klr::engine::{braid_correction_bound, square_case, SquareCase};
use crate::klr::KlrError;

/// Outcome of one relation instance on one sequence.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    /// Sequence rendered with datum index names, e.g. `a (c,2) a`.
    pub sequence: String,
    /// Relation family: `square`, `dot-slide`, `braid`, or `distant`.
    pub relation: String,
    /// Strand position the relation is anchored at (0-based).
    pub position: usize,
    /// Number of monomials the identity was applied to.
    pub monomials: usize,
    pub ok: bool,
}

/// All relation instances for a strand count, with an overall verdict.
#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// The strand alphabet of a datum: every index with multiplicity one,
/// plus higher multiplicities up to `max_mult` for non-isotropic indices
/// in the full alphabet mode.
pub fn strand_alphabet(
    datum: &Datum,
    mode: AlphabetMode,
    max_mult: u32,
) -> Result<Vec<StrandLabel>, KlrError> {
    let mut out = Vec::new();
    for i in datum.indices() {
        out.push(StrandLabel::new(datum, i, 1, mode)?);
        if mode == AlphabetMode::Full && datum.index_type(i) == IndexType::NonIsotropic {
            for m in 2..=max_mult {
                out.push(StrandLabel::new(datum, i, m, mode)?);
            }
        }
    }
    Ok(out)
}

/// All sequence classes (multisets) of exactly `strands` letters drawn
/// from the alphabet.
pub fn sequence_classes(
    alphabet: &[StrandLabel],
    strands: usize,
) -> Result<Vec<SequenceClass>, KlrError> {
    fn rec(
        alphabet: &[StrandLabel],
        strands: usize,
        start: usize,
        current: &mut Vec<StrandLabel>,
        out: &mut Vec<Vec<StrandLabel>>,
    ) {
        if strands == 0 {
            out.push(current.clone());
            return;
        }
        for idx in start..alphabet.len() {
            current.push(alphabet[idx]);
            rec(alphabet, strands - 1, idx, current, out);
            current.pop();
        }
    }
    let mut raw = Vec::new();
    rec(alphabet, strands, 0, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|labels| SequenceClass::new(labels).map_err(KlrError::from))
        .collect()
}

fn seq_name(datum: &Datum, seq: &[StrandLabel]) -> String {
    seq.iter()
        .map(|l| l.display(datum).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// The number of worker threads: capped by `BOZEC_KLR_THREADS` when set,
/// otherwise the available parallelism.
pub fn worker_threads(jobs: usize) -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let cap = std::env::var("BOZEC_KLR_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(available);
    cap.min(available.max(1)).min(jobs.max(1))
}

/// Verifies every local relation on every sequence of one class, against
/// all monomials of weighted degree at most `degree_bound`.
pub fn verify_local_relations(
    datum: &Datum,
    class: &SequenceClass,
    degree_bound: i64,
) -> Result<RelationReport, KlrError> {
    let action = PolyAction::new(datum.clone());
    let sequences = class.sequences();
    let mut checks = Vec::new();
    for seq in &sequences {
        checks.extend(check_sequence(datum, &action, seq, degree_bound)?);
    }
    Ok(RelationReport { checks })
}

/// Verifies all classes with exactly `strands` letters over the full
/// datum alphabet, fanning the per-sequence work across threads.
pub fn verify_all_relations(
    datum: &Datum,
    mode: AlphabetMode,
    strands: usize,
    max_mult: u32,
    degree_bound: i64,
) -> Result<RelationReport, KlrError> {
    let alphabet = strand_alphabet(datum, mode, max_mult)?;
    let mut sequences = Vec::new();
    for class in sequence_classes(&alphabet, strands)? {
        sequences.extend(class.sequences());
    }
    let workers = worker_threads(sequences.len());
    let action = PolyAction::new(datum.clone());

    let results: Vec<Result<Vec<RelationCheck>, KlrError>> = if workers <= 1 {
        sequences
            .iter()
            .map(|seq| check_sequence(datum, &action, seq, degree_bound))
            .collect()
    } else {
        let mut slots: Vec<Option<Result<Vec<RelationCheck>, KlrError>>> =
            (0..sequences.len()).map(|_| None).collect();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for worker in 0..workers {
                let sequences = &sequences;
                let action = &action;
                handles.push(scope.spawn(move || {
                    let mut mine = Vec::new();
                    let mut idx = worker;
                    while idx < sequences.len() {
                        mine.push((
                            idx,
                            check_sequence(datum, action, &sequences[idx], degree_bound),
                        ));
                        idx += workers;
                    }
                    mine
                }));
            }
            for handle in handles {
                for (idx, result) in handle.join().expect("relation worker panicked") {
                    slots[idx] = Some(result);
                }
            }
        });
        slots.into_iter().map(|s| s.unwrap()).collect()
    };

    let mut checks = Vec::new();
    for result in results {
        checks.extend(result?);
    }
    Ok(RelationReport { checks })
}

fn check_sequence(
    datum: &Datum,
    action: &PolyAction,
    seq: &[StrandLabel],
    degree_bound: i64,
) -> Result<Vec<RelationCheck>, KlrError> {
    let n = seq.len();
    let weights: Vec<i64> = seq.iter().map(|l| l.dot_degree(datum)).collect();
    let monomials = monomials_up_to(&weights, degree_bound);
    let name = seq_name(datum, seq);
    let mut out = Vec::new();

    for k in 0..n.saturating_sub(1) {
        out.push(RelationCheck {
            sequence: name.clone(),
            relation: "square".into(),
            position: k,
            monomials: monomials.len(),
            ok: check_square(datum, action, seq, k, &monomials)?,
        });
        out.push(RelationCheck {
            sequence: name.clone(),
            relation: "dot-slide".into(),
            position: k,
            monomials: monomials.len(),
            ok: check_dot_slide(datum, action, seq, k, &monomials)?,
        });
    }
    for k in 0..n.saturating_sub(2) {
        out.push(RelationCheck {
            sequence: name.clone(),
            relation: "braid".into(),
            position: k,
            monomials: monomials.len(),
            ok: check_braid(datum, action, seq, k, &monomials)?,
        });
    }
    for k in 0..n.saturating_sub(1) {
        for m in k + 2..n.saturating_sub(1) {
            out.push(RelationCheck {
                sequence: name.clone(),
                relation: "distant".into(),
                position: k,
                monomials: monomials.len(),
                ok: check_distant(action, seq, k, m, &monomials)?,
            });
        }
    }
    Ok(out)
}

/// Multiplies a vector by `x_k^{e_k} x_{k+1}^{e_{k+1}}` within one
/// component (diagonal operator, no component change).
fn dot_monomial(action: &PolyAction, k: usize, ek: u32, ek1: u32, v: &PolyVec) -> PolyVec {
    let mut out = v.clone();
    for _ in 0..ek {
        out = action.dot(k, &out);
    }
    for _ in 0..ek1 {
        out = action.dot(k + 1, &out);
    }
    out
}

fn check_square(
    datum: &Datum,
    action: &PolyAction,
    seq: &[StrandLabel],
    k: usize,
    monomials: &[Vec<u32>],
) -> Result<bool, KlrError> {
    let case = square_case(datum, &seq[k], &seq[k + 1]);
    for u in monomials {
        let v = PolyVec::monomial(seq.to_vec(), u.clone());
        let lhs = action.cross(k, &action.cross(k, &v)?)?;
        let rhs = match case {
            SquareCase::EqualReal => PolyVec::zero(),
            SquareCase::Orthogonal => v.clone(),
            SquareCase::EqualImaginary { m } => {
                let once = dot_monomial(action, k, m, 0, &v).add(&dot_monomial(action, k, 0, m, &v));
                dot_monomial(action, k, m, 0, &once).add(&dot_monomial(action, k, 0, m, &once))
            }
            SquareCase::Distinct { mk, mk1 } => {
                dot_monomial(action, k, mk, 0, &v).add(&dot_monomial(action, k, 0, mk1, &v))
            }
        };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_dot_slide(
    datum: &Datum,
    action: &PolyAction,
    seq: &[StrandLabel],
    k: usize,
    monomials: &[Vec<u32>],
) -> Result<bool, KlrError> {
    let equal_real =
        seq[k] == seq[k + 1] && datum.index_type(seq[k].index()) == IndexType::Real;
    for u in monomials {
        let v = PolyVec::monomial(seq.to_vec(), u.clone());
        let tv = action.cross(k, &v)?;
        // τ x_k versus x_{k+1} τ, and τ x_{k+1} versus x_k τ; for two
        // equal real strands both differences equal the identity.
        let lhs_a = action.cross(k, &action.dot(k, &v))?;
        let rhs_a = action.dot(k + 1, &tv);
        let lhs_b = action.cross(k, &action.dot(k + 1, &v))?;
        let rhs_b = action.dot(k, &tv);
        let pass = if equal_real {
            lhs_a.sub(&rhs_a) == v && rhs_b.sub(&lhs_b) == v
        } else {
            lhs_a == rhs_a && lhs_b == rhs_b
        };
        if !pass {
            return Ok(false);
        }
        // Dots on uninvolved strands always commute with the crossing.
        for p in 0..seq.len() {
            if p == k || p == k + 1 {
                continue;
            }
            if action.cross(k, &action.dot(p, &v))? != action.dot(p, &tv) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_braid(
    datum: &Datum,
    action: &PolyAction,
    seq: &[StrandLabel],
    k: usize,
    monomials: &[Vec<u32>],
) -> Result<bool, KlrError> {
    let correction = braid_correction_bound(datum, &seq[k], &seq[k + 1], &seq[k + 2]);
    for u in monomials {
        let v = PolyVec::monomial(seq.to_vec(), u.clone());
        let lhs = action.cross(
            k,
            &action.cross(k + 1, &action.cross(k, &v)?)?,
        )?;
        let rhs = action.cross(
            k + 1,
            &action.cross(k, &action.cross(k + 1, &v)?)?,
        )?;
        let mut expected = PolyVec::zero();
        if let Some(m) = correction {
            for c in 0..m {
                let mut term = v.clone();
                for _ in 0..c {
                    term = action.dot(k, &term);
                }
                for _ in 0..(m - 1 - c) {
                    term = action.dot(k + 2, &term);
                }
                expected = expected.add(&term);
            }
        }
        if lhs.sub(&rhs) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_distant(
    action: &PolyAction,
    seq: &[StrandLabel],
    k: usize,
    m: usize,
    monomials: &[Vec<u32>],
) -> Result<bool, KlrError> {
    for u in monomials {
        let v = PolyVec::monomial(seq.to_vec(), u.clone());
        let lhs = action.cross(k, &action.cross(m, &v)?)?;
        let rhs = action.cross(m, &action.cross(k, &v)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::abc_datum;

    #[test]
    fn alphabet_sizes_per_mode() {
        let datum = abc_datum();
        assert_eq!(
            strand_alphabet(&datum, AlphabetMode::Full, 2).unwrap().len(),
            4
        );
        assert_eq!(
            strand_alphabet(&datum, AlphabetMode::Appendix, 2)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn class_counts_are_multisets() {
        let datum = abc_datum();
        let alphabet = strand_alphabet(&datum, AlphabetMode::Full, 2).unwrap();
        assert_eq!(sequence_classes(&alphabet, 1).unwrap().len(), 4);
        assert_eq!(sequence_classes(&alphabet, 2).unwrap().len(), 10);
        assert_eq!(sequence_classes(&alphabet, 3).unwrap().len(), 20);
    }

    #[test]
    fn two_strand_relations_hold() {
        let datum = abc_datum();
        let report = verify_all_relations(&datum, AlphabetMode::Full, 2, 2, 6).unwrap();
        assert!(report.all_ok(), "failures: {:?}", report.failures().collect::<Vec<_>>());
        assert!(!report.checks.is_empty());
    }

    #[test]
    fn braid_sequences_with_corrections_hold() {
        let datum = abc_datum();
        let a = StrandLabel::plain(&datum, 0).unwrap();
        let c2 = StrandLabel::new(&datum, 2, 2, AlphabetMode::Full).unwrap();
        let class = SequenceClass::new(vec![a, c2, a]).unwrap();
        let report = verify_local_relations(&datum, &class, 6).unwrap();
        assert!(report.all_ok());
        // Three sequences, each with two squares, two slides, one braid.
        assert_eq!(report.checks.len(), 15);
    }

    #[test]
    fn worker_count_respects_env_cap() {
        // The env var is process-global; only exercise the parsing path
        // when it is unset to avoid cross-test interference.
        if std::env::var("BOZEC_KLR_THREADS").is_err() {
            assert!(worker_threads(100) >= 1);
            assert_eq!(worker_threads(1), 1);
        }
    }
}
