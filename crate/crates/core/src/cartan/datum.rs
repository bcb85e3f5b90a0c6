//! The datum itself: validation and the basic pairings derived from it.

use std::collections::BTreeSet;

use crate::scalar::LaurentPoly;

use super::CartanError;

/// Classification of an index by its diagonal entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndexType {
    /// a_ii = 2.
    Real,
    /// a_ii = 0.
    Isotropic,
    /// a_ii < 0 (even).
    NonIsotropic,
}

/// Raw, unvalidated input for a Borcherds-Cartan datum.
#[derive(Debug, Clone)]
pub struct CartanDatum {
    pub names: Vec<String>,
    /// The matrix (a_ij), row i column j.
    pub a: Vec<Vec<i64>>,
    /// Symmetrizers r_i > 0 with r_i a_ij = r_j a_ji.
    pub d: Vec<i64>,
    /// Oriented index-level edges (i, j) meaning i -> j. Missing connected
    /// pairs get the default orientation lower index -> higher index.
    pub orientation: Vec<(String, String)>,
}

/// A validated datum; constructing one proves all axioms hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Datum {
    names: Vec<String>,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    /// forward[i][j] = true iff the edge between i and j is oriented i -> j.
    forward: Vec<Vec<bool>>,
}

impl CartanDatum {
    pub fn new(names: Vec<String>, a: Vec<Vec<i64>>, d: Vec<i64>) -> Self {
        CartanDatum { names, a, d, orientation: Vec::new() }
    }

    pub fn with_orientation(mut self, orientation: Vec<(String, String)>) -> Self {
        self.orientation = orientation;
        self
    }

    /// Check every axiom; collect all violations rather than stopping at the
    /// first.
    pub fn validate(self) -> Result<Datum, CartanError> {
        let n = self.names.len();
        let mut errs = Vec::new();
        if n == 0 {
            errs.push("index set is empty".to_string());
        }
        if self.a.len() != n || self.a.iter().any(|row| row.len() != n) {
            errs.push(format!("matrix A must be {n} x {n}"));
            return Err(CartanError::Invalid(errs));
        }
        if self.d.len() != n {
            errs.push(format!("symmetrizer D must have length {n}"));
            return Err(CartanError::Invalid(errs));
        }
        {
            let mut seen = BTreeSet::new();
            for name in &self.names {
                if !seen.insert(name.clone()) {
                    errs.push(format!("duplicate index name {name:?}"));
                }
            }
        }
        for (i, &ri) in self.d.iter().enumerate() {
            if ri <= 0 {
                errs.push(format!("symmetrizer r_{} = {ri} must be positive", self.names[i]));
            }
        }
        for i in 0..n {
            let aii = self.a[i][i];
            if !(aii == 2 || (aii <= 0 && aii % 2 == 0)) {
                errs.push(format!(
                    "diagonal a_{{{0},{0}}} = {1} must be 2 or a nonpositive even integer",
                    self.names[i], aii
                ));
            }
            for j in 0..n {
                if i != j && self.a[i][j] > 0 {
                    errs.push(format!(
                        "off-diagonal a_{{{},{}}} = {} must be <= 0",
                        self.names[i], self.names[j], self.a[i][j]
                    ));
                }
                if i < j && self.d[i] > 0 && self.d[j] > 0 && self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i] {
                    errs.push(format!(
                        "symmetrizability fails: r_{} a_{{{},{}}} = {} but r_{} a_{{{},{}}} = {}",
                        self.names[i],
                        self.names[i],
                        self.names[j],
                        self.d[i] * self.a[i][j],
                        self.names[j],
                        self.names[j],
                        self.names[i],
                        self.d[j] * self.a[j][i]
                    ));
                }
            }
        }

        // Default orientation: lower index -> higher index.
        let mut forward = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                forward[i][j] = i < j;
            }
        }
        let mut seen_pairs = BTreeSet::new();
        for (from, to) in &self.orientation {
            let fi = self.names.iter().position(|s| s == from);
            let ti = self.names.iter().position(|s| s == to);
            match (fi, ti) {
                (Some(fi), Some(ti)) if fi != ti => {
                    let key = (fi.min(ti), fi.max(ti));
                    if !seen_pairs.insert(key) {
                        errs.push(format!("orientation given twice for edge {{{from}, {to}}}"));
                    }
                    forward[fi][ti] = true;
                    forward[ti][fi] = false;
                }
                (Some(_), Some(_)) => {
                    errs.push(format!("orientation loop {from:?} -> {from:?} is not allowed"));
                }
                _ => errs.push(format!("orientation references unknown index in ({from:?}, {to:?})")),
            }
        }

        if errs.is_empty() {
            Ok(Datum { names: self.names, a: self.a, d: self.d, forward })
        } else {
            Err(CartanError::Invalid(errs))
        }
    }
}

impl Datum {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize, CartanError> {
        self.names
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| CartanError::UnknownIndex(name.to_string()))
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Symmetrizer r_i (so q_i = q^{r_i}).
    pub fn r(&self, i: usize) -> i64 {
        self.d[i]
    }

    /// The symmetric pairing i.j = r_i a_ij = r_j a_ji.
    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.d[i] * self.a[i][j]
    }

    pub fn index_type(&self, i: usize) -> IndexType {
        match self.a[i][i] {
            2 => IndexType::Real,
            0 => IndexType::Isotropic,
            _ => IndexType::NonIsotropic,
        }
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.index_type(i) == IndexType::Real
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.names.len()
    }

    /// q_i = q^{r_i} as a Laurent polynomial.
    pub fn q_i(&self, i: usize) -> LaurentPoly {
        LaurentPoly::q_pow(self.d[i])
    }

    /// Exponent e with q_(i) = q^e, i.e. e = (i.i)/2. Always an integer since
    /// diagonal entries are even.
    pub fn q_round_exp(&self, i: usize) -> i64 {
        self.dot(i, i) / 2
    }

    /// True iff the edge between distinct indices i and j is oriented i -> j.
    pub fn oriented_forward(&self, i: usize, j: usize) -> bool {
        debug_assert_ne!(i, j);
        self.forward[i][j]
    }

    /// Flip every edge orientation (used to confirm orientation independence
    /// of algebraic invariants).
    pub fn reversed_orientation(&self) -> Datum {
        let n = self.len();
        let mut forward = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    forward[i][j] = !self.forward[i][j];
                }
            }
        }
        Datum { names: self.names.clone(), a: self.a.clone(), d: self.d.clone(), forward }
    }
}

/// A small datum with one index of each type: `a` real, `b` isotropic,
/// `c` non-isotropic.  Used as the standing example throughout the tests.
pub fn abc_datum() -> Datum {
    CartanDatum::new(
        vec!["a".into(), "b".into(), "c".into()],
        vec![vec![2, -1, -1], vec![-1, 0, 0], vec![-1, 0, -2]],
        vec![1, 1, 1],
    )
    .validate()
    .unwrap()
}
