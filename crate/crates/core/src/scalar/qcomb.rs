//! q-combinatorics: balanced q-integers, q-factorials, Gaussian binomials,
//! and q-Pochhammer symbols.

use super::{LaurentPoly, RatFunc, ScalarError};

/// Balanced q-integer in q^r:
/// [n]_r = (q^{rn} - q^{-rn}) / (q^r - q^{-r}) = q^{r(n-1)} + q^{r(n-3)} + ... + q^{-r(n-1)}.
///
/// Requires r != 0; [0]_r = 0 and [-n]_r = -[n]_r.
pub fn qint(n: i64, r: i64) -> Result<LaurentPoly, ScalarError> {
    if r == 0 {
        return Err(ScalarError::Domain("qint needs r != 0".into()));
    }
    let sign_neg = n < 0;
    let n_abs = n.unsigned_abs() as i64;
    let mut out = LaurentPoly::zero();
    let mut k = r * (n_abs - 1);
    for _ in 0..n_abs {
        out.add_term(&num::BigRational::from(num::BigInt::from(1)), k);
        k -= 2 * r;
    }
    Ok(if sign_neg { -&out } else { out })
}

/// Balanced q-factorial [n]_r! = [1]_r [2]_r ... [n]_r.
pub fn qfact(n: u32, r: i64) -> Result<LaurentPoly, ScalarError> {
    let mut out = LaurentPoly::one();
    for k in 1..=n as i64 {
        out = &out * &qint(k, r)?;
    }
    Ok(out)
}

/// One-variable Gaussian binomial
/// [n m] = (1-q^n)(1-q^{n-1})...(1-q^{n-m+1}) / ((1-q)(1-q^2)...(1-q^m)),
/// a polynomial in q with nonnegative integer coefficients; [n m] = 0 for
/// m > n and [n 0] = 1. Requires n >= 0.
pub fn qbinom(n: i64, m: u32) -> Result<LaurentPoly, ScalarError> {
    if n < 0 {
        return Err(ScalarError::Domain(format!("qbinom needs n >= 0, got {n}")));
    }
    if (m as i64) > n {
        return Ok(LaurentPoly::zero());
    }
    let mut num = RatFunc::one();
    let mut den = RatFunc::one();
    for k in 1..=m as i64 {
        num = &num * &RatFunc::from_laurent(LaurentPoly::one_minus_q_pow(n - m as i64 + k));
        den = &den * &RatFunc::from_laurent(LaurentPoly::one_minus_q_pow(k));
    }
    let ratio = num.div(&den).expect("Gaussian binomial denominator is nonzero");
    debug_assert!(ratio.denominator().is_one(), "Gaussian binomial must divide exactly");
    Ok(ratio.numerator().clone())
}

/// q-Pochhammer (q^a; q)_n = (1-q^a)(1-q^{a+1})...(1-q^{a+n-1}).
pub fn pochhammer(a: i64, n: u32) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for k in 0..n as i64 {
        out = &out * &LaurentPoly::one_minus_q_pow(a + k);
    }
    out
}

#[cfg(test)]
mod test {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            out.add_term(&num::BigRational::from(num::BigInt::from(*c)), *e);
        }
        out
    }

    #[test]
    fn balanced_q_integers() {
        assert_eq!(qint(2, 1).unwrap(), p(&[(-1, 1), (1, 1)]));
        assert_eq!(qint(3, 2).unwrap(), p(&[(-4, 1), (0, 1), (4, 1)]));
        assert_eq!(qint(0, 1).unwrap(), LaurentPoly::zero());
        assert_eq!(qint(-2, 1).unwrap(), -&qint(2, 1).unwrap());
        assert!(qint(2, 0).is_err());
    }

    #[test]
    fn q_factorial() {
        // [2]! = q + q^-1 times [1] = 1
        assert_eq!(qfact(2, 1).unwrap(), p(&[(-1, 1), (1, 1)]));
        // [3]! = (q+q^-1)(q^2+1+q^-2)
        let expect = &qint(2, 1).unwrap() * &qint(3, 1).unwrap();
        assert_eq!(qfact(3, 1).unwrap(), expect);
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(qbinom(3, 1).unwrap(), p(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(qbinom(4, 2).unwrap(), p(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert_eq!(qbinom(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(qbinom(2, 3).unwrap(), LaurentPoly::zero());
        assert!(qbinom(-1, 0).is_err());
    }

    #[test]
    fn pascal_identity() {
        // [n+1 m] = q^m [n m] + [n m-1]
        for n in 0..=12i64 {
            for m in 1..=(n as u32 + 1) {
                let lhs = qbinom(n + 1, m).unwrap();
                let rhs = &qbinom(n, m).unwrap().shifted(m as i64) + &qbinom(n, m - 1).unwrap();
                assert_eq!(lhs, rhs, "Pascal fails at n={n}, m={m}");
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(1, 1), p(&[(0, 1), (1, -1)]));
        assert_eq!(pochhammer(2, 2), &LaurentPoly::one_minus_q_pow(2) * &LaurentPoly::one_minus_q_pow(3));
        assert_eq!(pochhammer(1, 0), LaurentPoly::one());
    }
}
