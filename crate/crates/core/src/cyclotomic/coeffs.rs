//! Scalar coefficients of the Jordan-quiver cyclotomic module: the
//! partition generating functions `β_p`, the commutator scalars `α_p`
//! with their recursion, and the plain-`q` identity underlying their
//! agreement.

use crate::cyclotomic::JordanConfig;
use crate::scalar::{pochhammer, qbinom, LaurentPoly, RatFunc};

/// `β_p`: the graded count of partitions with at most `a` columns and
/// `p` rows, in `q_i²`.
///
/// `β_p = Π_{j=0}^{p-1}(1-q_i^{2(a+j)}) / Π_{k=1}^{p}(1-q_i^{2k})`,
/// with `β_0 = 1`; at `a = 0` the quotient collapses and `β_p = 0` for
/// `p ≥ 1`.
pub fn beta(p: u32, config: &JordanConfig) -> RatFunc {
    if p == 0 {
        return RatFunc::one();
    }
    if config.a() == 0 {
        return RatFunc::zero();
    }
    let r = config.r();
    let a = i64::from(config.a());
    let mut out = RatFunc::one();
    for j in 0..i64::from(p) {
        let num = RatFunc::from_laurent(LaurentPoly::one_minus_q_pow(2 * r * (a + j)));
        out = &out * &num;
    }
    for k in 1..=i64::from(p) {
        out = &out * &RatFunc::inv_one_minus_q_pow(2 * r * k);
    }
    out
}

/// `ν_k = 1/Π_{m=1}^{k}(1-q_i^{2m})`, the norm of the `k`-fold averaged
/// projective.
pub fn nu(k: u32, config: &JordanConfig) -> RatFunc {
    let r = config.r();
    let mut out = RatFunc::one();
    for m in 1..=i64::from(k) {
        out = &out * &RatFunc::inv_one_minus_q_pow(2 * r * m);
    }
    out
}

/// The commutator scalar `α_p = q_i^{-pa} β_p` in closed form.
pub fn alpha(p: u32, config: &JordanConfig) -> RatFunc {
    let shift = -i64::from(p) * i64::from(config.a()) * config.r();
    beta(p, config).shifted(shift)
}

/// `α_p` recomputed through the recursion
/// `α_p = ν_p(K^{-p} - K^{p}) - Σ_{k=1}^{p-1} ν_k K^k α_{p-k}` with
/// `K = q_i^a`; must agree with [`alpha`] for every `p`.
pub fn alpha_by_recursion(p: u32, config: &JordanConfig) -> RatFunc {
    assert!(p >= 1, "alpha recursion starts at p = 1");
    let ka = i64::from(config.a()) * config.r();
    let k_pow = |e: i64| RatFunc::q_pow(ka * e);
    let mut known: Vec<RatFunc> = vec![RatFunc::zero()];
    for step in 1..=p {
        let s = i64::from(step);
        let mut value = &nu(step, config) * &(&k_pow(-s) - &k_pow(s));
        for k in 1..step {
            let term = &(&nu(k, config) * &k_pow(i64::from(k))) * &known[(step - k) as usize];
            value = &value - &term;
        }
        known.push(value);
    }
    known[p as usize].clone()
}

/// The plain-`q` polynomial identity equivalent to the closed form of
/// `α_p` solving its recursion:
/// `1 - q^{pa} = Σ_{k=0}^{p-1} q^{ka} [p choose k] (q^a; q)_{p-k}`.
pub fn gauss_identity_check(p: u32, a: u32) -> bool {
    assert!(p >= 1 && a >= 1, "identity needs p >= 1 and a >= 1");
    let (p, a) = (i64::from(p), i64::from(a));
    let lhs = LaurentPoly::one_minus_q_pow(p * a);
    let mut rhs = LaurentPoly::zero();
    for k in 0..p {
        let binom = qbinom(p, k as u32).expect("qbinom on small nonnegative arguments");
        let falling = pochhammer(a, (p - k) as u32);
        rhs = &rhs + &(&binom * &falling).shifted(k * a);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::TruncSeries;

    fn cfg(r: i64, a: u32) -> JordanConfig {
        JordanConfig::new(r, a).unwrap()
    }

    #[test]
    fn beta_base_cases() {
        let c = cfg(1, 2);
        assert!(beta(0, &c).is_one());
        let expected = &RatFunc::from_laurent(LaurentPoly::one_minus_q_pow(4))
            * &RatFunc::inv_one_minus_q_pow(2);
        assert_eq!(beta(1, &c), expected);
        assert!(beta(3, &cfg(1, 0)).is_zero());
        // At a = 1 every factor cancels pairwise.
        for p in 0..=5 {
            assert!(beta(p, &cfg(2, 1)).is_one());
        }
    }

    #[test]
    fn beta_two_columns_is_quantum_triangle() {
        // β_2 at a = 2: (1-q^4)(1-q^6)/((1-q^2)(1-q^4)) = 1 + q^2 + q^4.
        let value = beta(2, &cfg(1, 2));
        let expected = RatFunc::from_laurent(
            &(&LaurentPoly::one() + &LaurentPoly::q_pow(2)) + &LaurentPoly::q_pow(4),
        );
        assert_eq!(value, expected);
    }

    #[test]
    fn beta_is_a_gaussian_binomial_in_q_squared() {
        // The box-partition count: β_p = [a+p-1 choose p] at q -> q_i².
        for a in 1..=4u32 {
            for p in 0..=4u32 {
                for r in [1i64, 2] {
                    let binom = qbinom(i64::from(a + p) - 1, p).unwrap().subst_q_pow(2 * r);
                    assert_eq!(
                        beta(p, &cfg(r, a)),
                        RatFunc::from_laurent(binom),
                        "a = {a}, p = {p}, r = {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn beta_series_coefficients_are_nonnegative() {
        for a in 1..=5u32 {
            for p in 0..=6u32 {
                let series = TruncSeries::expand(&beta(p, &cfg(1, a)), 24).unwrap();
                for k in 0..24 {
                    assert!(
                        series.coeff(k) >= num::BigRational::from_integer(0.into()),
                        "negative coefficient at q^{k} for a = {a}, p = {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_closed_form_solves_the_recursion() {
        for a in 0..=5u32 {
            for r in [1i64, 3] {
                let c = cfg(r, a);
                for p in 1..=6 {
                    assert_eq!(
                        alpha(p, &c),
                        alpha_by_recursion(p, &c),
                        "a = {a}, r = {r}, p = {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_one_matches_its_base_case() {
        let c = cfg(1, 3);
        let expected = &nu(1, &c) * &(&RatFunc::q_pow(-3) - &RatFunc::q_pow(3));
        assert_eq!(alpha(1, &c), expected);
    }

    #[test]
    fn gauss_identity_sweep() {
        for p in 1..=6 {
            for a in 1..=5 {
                assert!(gauss_identity_check(p, a), "p = {p}, a = {a}");
            }
        }
    }
}
