//! Graded dimensions of the cyclotomic quotient `R^Λ(ni)` for the
//! Jordan quiver, compared against its product basis count.
//!
//! The ambient algebra is the smash product of a polynomial ring with
//! the symmetric group; the cyclotomic ideal is two-sided, generated by
//! `x_1^a`.  The oracle closes the ideal degree by degree with exact
//! linear algebra, while the prediction counts the monomial basis
//! `x^u τ_ω` with every exponent below `a`.

use crate::cyclotomic::{CycloError, JordanConfig};
use crate::scalar::{LaurentPoly, RatFunc, TruncSeries};
use crate::smash;

/// Brute-force and predicted graded dimensions of `R^Λ(ni)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDims {
    pub oracle: TruncSeries,
    pub predicted: TruncSeries,
}

impl QuotientDims {
    pub fn ok(&self) -> bool {
        self.oracle == self.predicted
    }
}

/// Compares the ideal-closure dimensions with
/// `n! ((1-q_i^{2a})/(1-q_i^2))^n` up to `q^order`; the brute-force side
/// caps `n` and `a` at 3.
pub fn cyclotomic_quotient_dims(
    n: usize,
    config: &JordanConfig,
    order: usize,
) -> Result<QuotientDims, CycloError> {
    if n > 3 {
        return Err(CycloError::Bound {
            what: "strand count",
            got: n as i64,
            max: 3,
        });
    }
    if config.a() > 3 {
        return Err(CycloError::Bound {
            what: "cyclotomic exponent",
            got: i64::from(config.a()),
            max: 3,
        });
    }
    let r = config.r();
    let a = config.a();
    let oracle = smash::cyclotomic_quotient_dim_series(r, n, a, order);
    let factorial: i64 = (1..=n as i64).product();
    let column = &RatFunc::from_laurent(LaurentPoly::one_minus_q_pow(2 * r * i64::from(a)))
        * &RatFunc::inv_one_minus_q_pow(2 * r);
    let closed = &RatFunc::from_int(factorial) * &column.pow(n as i64)?;
    let predicted = TruncSeries::expand(&closed, order)?;
    Ok(QuotientDims { oracle, predicted })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(r: i64, a: u32) -> JordanConfig {
        JordanConfig::new(r, a).unwrap()
    }

    #[test]
    fn one_strand_is_a_truncated_polynomial_ring() {
        let dims = cyclotomic_quotient_dims(1, &cfg(1, 2), 10).unwrap();
        assert!(dims.ok());
        let expected = TruncSeries::expand(
            &RatFunc::from_laurent(&LaurentPoly::one() + &LaurentPoly::q_pow(2)),
            10,
        )
        .unwrap();
        assert_eq!(dims.oracle, expected);
    }

    #[test]
    fn exponent_one_collapses_to_the_group_algebra() {
        let dims = cyclotomic_quotient_dims(2, &cfg(1, 1), 8).unwrap();
        assert!(dims.ok());
        assert_eq!(
            dims.oracle,
            TruncSeries::expand(&RatFunc::from_int(2), 8).unwrap()
        );
    }

    #[test]
    fn two_strands_level_two_match() {
        let dims = cyclotomic_quotient_dims(2, &cfg(1, 2), 8).unwrap();
        assert!(dims.ok());
    }

    #[test]
    fn zero_level_is_the_zero_algebra() {
        let dims = cyclotomic_quotient_dims(2, &cfg(1, 0), 6).unwrap();
        assert!(dims.ok());
        assert!(dims.oracle.is_zero());
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(cyclotomic_quotient_dims(4, &cfg(1, 2), 6).is_err());
        assert!(cyclotomic_quotient_dims(2, &cfg(1, 4), 6).is_err());
    }
}
