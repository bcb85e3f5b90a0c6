//! Laurent polynomials in one variable q with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Coeff;

/// A Laurent polynomial sum_k c_k q^k, k in Z, with exact rational c_k.
///
/// Invariant: the coefficient map never stores a zero coefficient, so
/// structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Coeff>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::q_pow(0)
    }

    /// The variable q itself.
    pub fn q() -> Self {
        LaurentPoly::q_pow(1)
    }

    /// The monomial q^k.
    pub fn q_pow(k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(k, Coeff::one());
        LaurentPoly { coeffs }
    }

    /// The constant polynomial c.
    pub fn constant(c: Coeff) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        LaurentPoly { coeffs }
    }

    /// The constant polynomial n.
    pub fn from_int(n: i64) -> Self {
        LaurentPoly::constant(Coeff::from(BigInt::from(n)))
    }

    /// The monomial c q^k.
    pub fn term(c: Coeff, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// 1 - q^k.
    pub fn one_minus_q_pow(k: i64) -> Self {
        &LaurentPoly::one() - &LaurentPoly::q_pow(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    /// Coefficient of q^k (zero if absent).
    pub fn coeff(&self, k: i64) -> Coeff {
        self.coeffs.get(&k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Smallest exponent with nonzero coefficient, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Iterate over (exponent, coefficient) pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Coeff)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, c: &Coeff, k: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Multiply by q^k.
    pub fn shifted(&self, k: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect();
        LaurentPoly { coeffs }
    }

    /// Multiply every coefficient by c.
    pub fn scaled(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let coeffs = self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect();
        LaurentPoly { coeffs }
    }

    /// Substitute q -> q^m (m nonzero); the bar involution is m = -1.
    pub fn subst_q_pow(&self, m: i64) -> Self {
        assert!(m != 0, "substitution exponent must be nonzero");
        let coeffs = self.coeffs.iter().map(|(e, c)| (e * m, c.clone())).collect();
        LaurentPoly { coeffs }
    }

    /// Bar involution q -> q^-1.
    pub fn bar(&self) -> Self {
        self.subst_q_pow(-1)
    }

    /// Evaluate at q = 1 (sum of coefficients).
    pub fn eval_one(&self) -> Coeff {
        self.coeffs.values().fold(Coeff::zero(), |acc, c| acc + c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.coeffs.iter() {
            out.add_term(c, *k);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.coeffs.iter() {
            out.add_term(&(-c.clone()), *k);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect();
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in self.coeffs.iter() {
            for (kb, cb) in rhs.coeffs.iter() {
                out.add_term(&(ca * cb), ka + kb);
            }
        }
        out
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders e.g. "1 + q^2 - 3*q^4" with exponents ascending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter() {
            let neg = c < &Coeff::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = if mag.is_one() && *k != 0 { None } else { Some(fmt_coeff(&mag)) };
            match (coeff_part, *k) {
                (Some(c), 0) => write!(f, "{c}")?,
                (Some(c), 1) => write!(f, "{c}*q")?,
                (Some(c), k) => write!(f, "{c}*q^{k}")?,
                (None, 1) => write!(f, "q")?,
                (None, k) => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    /// JSON object mapping exponent to coefficient, both as strings:
    /// `{"0": "1", "2": "-3/2"}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (k, c) in self.coeffs.iter() {
            map.serialize_entry(&k.to_string(), &fmt_coeff(c))?;
        }
        map.end()
    }
}

struct LaurentVisitor;

impl<'de> Visitor<'de> for LaurentVisitor {
    type Value = LaurentPoly;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "a map from exponent strings to rational-coefficient strings")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LaurentPoly, A::Error> {
        let mut out = LaurentPoly::zero();
        while let Some((k, v)) = access.next_entry::<String, String>()? {
            let exp: i64 = k
                .trim()
                .parse()
                .map_err(|e| serde::de::Error::custom(format!("bad exponent {k:?}: {e}")))?;
            let coeff: BigRational = v
                .trim()
                .parse()
                .map_err(|e| serde::de::Error::custom(format!("bad coefficient {v:?}: {e}")))?;
            out.add_term(&coeff, exp);
        }
        Ok(out)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_map(LaurentVisitor)
    }
}

#[cfg(test)]
mod test {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            out.add_term(&Coeff::from(BigInt::from(*c)), *e);
        }
        out
    }

    #[test]
    fn ring_basics() {
        let a = p(&[(0, 1), (2, 1)]);
        let b = p(&[(-1, 2)]);
        assert_eq!(&a * &b, p(&[(-1, 2), (1, 2)]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&a + &(-&a), LaurentPoly::zero());
        assert_eq!(a.pow(2), p(&[(0, 1), (2, 2), (4, 1)]));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut a = p(&[(3, 5)]);
        a.add_term(&Coeff::from(BigInt::from(-5)), 3);
        assert!(a.is_zero());
        assert_eq!(a.min_exp(), None);
    }

    #[test]
    fn bar_negates_exponents() {
        let a = p(&[(-1, 3), (2, 1)]);
        assert_eq!(a.bar(), p(&[(1, 3), (-2, 1)]));
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn display_matches_expected_layout() {
        assert_eq!(p(&[(0, 1), (2, 1), (4, 1)]).to_string(), "1 + q^2 + q^4");
        assert_eq!(p(&[(-2, 1)]).to_string(), "q^-2");
        assert_eq!(p(&[(0, -1), (1, 2)]).to_string(), "-1 + 2*q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let a = p(&[(-1, 2), (3, -7)]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"-1":"2","3":"-7"}"#);
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
