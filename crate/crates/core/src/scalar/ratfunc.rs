//! Rational functions in q with a canonical form.
//!
//! Every value is stored as q^k * p(q) / d(q) with p, d ordinary polynomials,
//! p(0) != 0 (the whole q-power of the numerator is carried by k), d(0) = 1,
//! and gcd(p, d) = 1. With that normalization two values are equal exactly
//! when their representations are identical, so `==` is mathematical
//! equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Coeff, LaurentPoly, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

// --- polynomial helpers (nonnegative exponents only) ---

/// Long division a = q*b + r with deg r < deg b; requires b != 0 and both
/// arguments supported in nonnegative exponents.
fn poly_divmod(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    debug_assert!(!b.is_zero());
    debug_assert!(a.min_exp().unwrap_or(0) >= 0 && b.min_exp().unwrap_or(0) >= 0);
    let db = b.max_exp().expect("nonzero divisor");
    let lead_b = b.coeff(db);
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    while let Some(dr) = rem.max_exp() {
        if dr < db {
            break;
        }
        let c = rem.coeff(dr) / lead_b.clone();
        let k = dr - db;
        quot.add_term(&c, k);
        rem = &rem - &b.shifted(k).scaled(&c);
    }
    (quot, rem)
}

fn poly_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (q, r) = poly_divmod(a, b);
    debug_assert!(r.is_zero(), "inexact polynomial division");
    q
}

/// Makes the leading coefficient 1.
fn monic(a: &LaurentPoly) -> LaurentPoly {
    match a.max_exp() {
        None => LaurentPoly::zero(),
        Some(d) => {
            let lead = a.coeff(d);
            a.scaled(&(Coeff::one() / lead))
        }
    }
}

/// Monic gcd over Q[q] by the Euclidean algorithm.
fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut x = monic(a);
    let mut y = monic(b);
    while !y.is_zero() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = monic(&r);
    }
    x
}

impl RatFunc {
    /// num/den in canonical form; fails only when den = 0.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let p = num.shifted(-a);
        let d = den.shifted(-b);
        let g = poly_gcd(&p, &d);
        let mut p = poly_div_exact(&p, &g);
        let mut d = poly_div_exact(&d, &g);
        let c0 = d.coeff(0);
        debug_assert!(!c0.is_zero());
        let inv = Coeff::one() / c0;
        p = p.scaled(&inv);
        d = d.scaled(&inv);
        RatFunc { num: p.shifted(a - b), den: d }
    }

    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    /// 1 / (1 - q^k), k > 0.
    pub fn inv_one_minus_q_pow(k: i64) -> Self {
        assert!(k > 0);
        Self::canonical(LaurentPoly::one(), LaurentPoly::one_minus_q_pow(k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Bar involution q -> q^-1 (re-canonicalized).
    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    /// Substitute q -> q^m, m nonzero.
    pub fn subst_q_pow(&self, m: i64) -> Self {
        Self::canonical(self.num.subst_q_pow(m), self.den.subst_q_pow(m))
    }

    /// Scale by q^k.
    pub fn shifted(&self, k: i64) -> Self {
        RatFunc { num: self.num.shifted(k), den: self.den.clone() }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::canonical(num, &self.den * &rhs.den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = RatFuncRepr::deserialize(d)?;
        RatFunc::new(repr.num, repr.den)
            .map_err(|e| serde::de::Error::custom(format!("invalid rational function: {e}")))
    }
}
