//! Partitions and compositions of a nonnegative integer.
//!
//! Orderings used throughout the crate:
//! - partitions of n are listed lexicographically descending, so (n) first
//!   and (1^n) last;
//! - compositions of n are listed with the first part descending, then
//!   recursively on the remainder, so (n), (n-1,1), ..., (1,...,1).
//!
//! Both orders make every matrix indexed by shapes deterministic.

use std::fmt;

use super::SymgrpError;

/// Weakly decreasing positive parts. The derived `Ord` is lexicographic on
/// the part vectors, which restricted to partitions of a fixed n is the
/// dominance-compatible lexicographic order used for unitriangularity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymgrpError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(SymgrpError::BadShape("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymgrpError::BadShape(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row (n); the empty partition when n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `row`, zero past the end; rows are 0-based.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let Some(&first) = self.parts.first() else { return Self::empty() };
        let parts = (1..=first)
            .map(|col| self.parts.iter().filter(|&&p| p >= col).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff the Young diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.parts.iter().enumerate().all(|(row, &p)| self.part(row) >= p)
    }

    /// True iff `self`/`inner` is a horizontal strip: containment plus no
    /// column holding two cells of the skew shape, i.e. self_{r+1} <= inner_r
    /// for every row r.
    pub fn horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.parts.len()).all(|r| r == 0 || self.part(r) <= inner.part(r - 1))
    }

    /// Removable corners: rows whose last cell can be deleted leaving a
    /// partition. Returns the smaller partitions.
    pub fn corners_removed(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..self.parts.len() {
            if self.part(row) > self.part(row + 1) {
                let mut parts = self.parts.clone();
                parts[row] -= 1;
                if parts[row] == 0 {
                    parts.truncate(row);
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// All partitions obtained by removing a horizontal strip of `k` cells.
    pub fn strips_removed(&self, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        // Row r of the result may range over [max(self_{r+1}, ?), self_r]
        // subject to the strip condition result_r >= self_{r+1}; enumerate
        // row choices depth-first.
        fn go(outer: &Partition, row: usize, remaining: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == outer.len() {
                if remaining == 0 {
                    let mut parts = acc.clone();
                    while parts.last() == Some(&0) {
                        parts.pop();
                    }
                    out.push(Partition { parts });
                }
                return;
            }
            let hi = outer.part(row);
            // Strip condition against the row above: inner_{r-1} >= outer_r.
            let lo = outer.part(row + 1);
            for keep in (lo..=hi).rev() {
                let removed = hi - keep;
                if removed > remaining {
                    break;
                }
                if row > 0 && acc[row - 1] < hi {
                    // A previous row kept fewer cells than this row's outer
                    // length: the result would not be weakly decreasing
                    // unless keep <= acc[row-1].
                    if keep > acc[row - 1] {
                        continue;
                    }
                }
                acc.push(keep);
                go(outer, row + 1, remaining - removed, acc, out);
                acc.pop();
            }
        }
        let mut acc = Vec::new();
        go(self, 0, k, &mut acc, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Ordered positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymgrpError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(SymgrpError::BadShape("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// The partition obtained by sorting the parts descending.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts form a partition")
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition { parts: p.parts().to_vec() }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of n, lexicographically descending.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=n.min(max_part)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of n, first part descending then recursively.
pub fn compositions(n: u32) -> Vec<Composition> {
    fn go(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition { parts: prefix.clone() });
            return;
        }
        for part in (1..=n).rev() {
            prefix.push(part);
            go(n - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}
