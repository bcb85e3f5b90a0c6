//! Exact dense linear algebra over a field, small scale.
//!
//! Everything here is plain Gaussian elimination with exact arithmetic; the
//! fields in use are Q (rational matrix entries) and Q(q) (rational-function
//! entries). Matrices stay well under a few hundred rows in this crate, so no
//! pivoting strategy beyond "first nonzero entry" is needed for correctness
//! or speed.

use num::BigRational;

use crate::scalar::RatFunc;

/// Minimal field interface for elimination. `div_ref` may assume a nonzero
/// divisor; callers uphold that by testing `is_zero` first.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn div_ref(&self, other: &Self) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self.div(other).expect("division by zero in elimination")
    }
}

/// Incremental row-echelon accumulator: feed rows one at a time and watch the
/// rank grow. Stored rows are normalized to a leading 1 and kept reduced
/// against each other.
#[derive(Debug, Clone)]
pub struct RowReducer<F> {
    width: usize,
    /// Parallel arrays: `rows[k]` has its leading 1 in column `pivots[k]`,
    /// and `pivots` is strictly increasing.
    pivots: Vec<usize>,
    rows: Vec<Vec<F>>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(width: usize) -> Self {
        RowReducer { width, pivots: Vec::new(), rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows without inserting it.
    pub fn reduce(&self, mut row: Vec<F>) -> Vec<F> {
        assert_eq!(row.len(), self.width, "row width mismatch");
        for (k, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (entry, base) in row.iter_mut().zip(&self.rows[k]) {
                *entry = entry.sub_ref(&factor.mul_ref(base));
            }
        }
        row
    }

    /// Inserts `row` if it is independent of the stored rows; returns whether
    /// the rank grew.
    pub fn insert(&mut self, row: Vec<F>) -> bool {
        let mut row = self.reduce(row);
        let Some(pivot) = row.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let lead = row[pivot].clone();
        for entry in &mut row {
            *entry = entry.div_ref(&lead);
        }
        // Back-substitute into the stored rows so the basis stays reduced.
        for (k, stored) in self.rows.iter_mut().enumerate() {
            let factor = stored[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            debug_assert!(self.pivots[k] < pivot);
            for (entry, new) in stored.iter_mut().zip(&row) {
                *entry = entry.sub_ref(&factor.mul_ref(new));
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, row);
        true
    }

    /// True iff `row` lies in the span of the stored rows.
    pub fn contains(&self, row: Vec<F>) -> bool {
        self.reduce(row).iter().all(|e| e.is_zero())
    }
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut reducer = RowReducer::new(first.len());
    for row in rows {
        reducer.insert(row.clone());
    }
    reducer.rank()
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let n = a.len();
    assert_eq!(b.len(), n, "shape mismatch");
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix is not square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let lead = m[col][col].clone();
        for entry in &mut m[col] {
            *entry = entry.div_ref(&lead);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let base = m[col].clone();
            for (entry, bv) in m[r].iter_mut().zip(&base) {
                *entry = entry.sub_ref(&factor.mul_ref(bv));
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Inverts a square matrix; `None` when singular.
pub fn invert<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<F> = (0..n).map(|r| if r == j { F::one() } else { F::zero() }).collect();
        cols.push(solve(a, &e)?);
    }
    // `cols[j]` is the j-th column of the inverse; transpose into rows.
    Some((0..n).map(|r| (0..n).map(|j| cols[j][r].clone()).collect()).collect())
}

#[cfg(test)]
mod test {
    use super::*;
    use num::FromPrimitive;

    fn rat(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn rank_over_q() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&rows[..2]), 1);
    }

    #[test]
    fn incremental_reducer() {
        let mut red = RowReducer::new(3);
        assert!(red.insert(vec![rat(0), rat(2), rat(4)]));
        assert!(!red.insert(vec![rat(0), rat(1), rat(2)]));
        assert!(red.insert(vec![rat(1), rat(1), rat(1)]));
        assert_eq!(red.rank(), 2);
        assert!(red.contains(vec![rat(3), rat(5), rat(7)]));
        assert!(!red.contains(vec![rat(0), rat(0), rat(1)]));
    }

    #[test]
    fn solve_over_ratfunc() {
        // [[1, q], [0, 1-q^2]] x = [1+q, 1-q^2]  =>  x = [1+q-q, 1] = [1, 1]... check exactly.
        let q = RatFunc::q_pow(1);
        let one = RatFunc::one();
        let a = vec![
            vec![one.clone(), q.clone()],
            vec![RatFunc::zero(), &one - &(&q * &q)],
        ];
        let b = vec![&one + &q, &one - &(&q * &q)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[1], one);
        assert_eq!(x[0], one);
        let singular = vec![vec![q.clone(), q.clone()], vec![q.clone(), q.clone()]];
        assert!(solve(&singular, &b).is_none());
    }

    #[test]
    fn invert_round_trip() {
        let a = vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(1)],
            vec![rat(0), rat(3), rat(1)],
        ];
        let inv = invert(&a).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = rat(0);
                for k in 0..3 {
                    acc = acc.add_ref(&a[r][k].mul_ref(&inv[k][c]));
                }
                assert_eq!(acc, if r == c { rat(1) } else { rat(0) });
            }
        }
    }
}
