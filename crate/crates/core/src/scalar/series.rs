//! Power-series expansions at q = 0, truncated at a fixed order.

use std::fmt;

use num::Zero;

use super::{Coeff, RatFunc, ScalarError};

/// Coefficients of q^0 .. q^order of a power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<Coeff>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![Coeff::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Coeff::from(num::BigInt::from(1));
        s
    }

    pub fn from_coeffs(order: usize, coeffs: Vec<Coeff>) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, Coeff::zero());
        TruncSeries { order, coeffs }
    }

    /// Expand num/den at q = 0 by long division.
    ///
    /// Fails with `NotExpandable` when the canonical form carries a negative
    /// q-power, i.e. the function has a pole at q = 0.
    pub fn expand(f: &RatFunc, order: usize) -> Result<Self, ScalarError> {
        if f.is_zero() {
            return Ok(Self::zero(order));
        }
        let k = f.numerator().min_exp().expect("nonzero numerator");
        if k < 0 {
            return Err(ScalarError::NotExpandable(format!("pole of order {} at q = 0", -k)));
        }
        let den = f.denominator();
        debug_assert_eq!(den.coeff(0), Coeff::from(num::BigInt::from(1)));
        let mut coeffs = vec![Coeff::zero(); order + 1];
        for j in 0..=order {
            // c_j = num_j - sum_{t<j} c_t den_{j-t}  (den_0 = 1)
            let mut c = f.numerator().coeff(j as i64);
            for t in 0..j {
                if !coeffs[t].is_zero() {
                    c -= coeffs[t].clone() * den.coeff((j - t) as i64);
                }
            }
            coeffs[j] = c;
        }
        Ok(TruncSeries { order, coeffs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Truncate to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order);
        TruncSeries { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        TruncSeries { order, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        TruncSeries { order, coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![Coeff::zero(); order + 1];
        for a in 0..=order {
            if self.coeff(a).is_zero() {
                continue;
            }
            for b in 0..=(order - a) {
                let t = self.coeff(a) * rhs.coeff(b);
                coeffs[a + b] += t;
            }
        }
        TruncSeries { order, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut poly = super::LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            poly.add_term(c, k as i64);
        }
        write!(f, "{} + O(q^{})", poly, self.order + 1)
    }
}
