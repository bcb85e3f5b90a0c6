//! Tableau counts: Kostka numbers, standard Young tableaux, skew shapes.

use std::collections::HashMap;

use num::{BigInt, BigUint, One};

use super::partition::{Composition, Partition};
use super::SymgrpError;

/// K_{lambda,c}: semistandard tableaux of shape lambda and content c,
/// counted as chains of horizontal strips with sizes c_1, c_2, ....
pub fn kostka(shape: &Partition, content: &Composition) -> Result<u64, SymgrpError> {
    if shape.size() != content.size() {
        return Err(SymgrpError::SizeMismatch { left: shape.size(), right: content.size() });
    }
    Ok(chain_count(shape, content.parts()))
}

fn chain_count(shape: &Partition, parts: &[u32]) -> u64 {
    let Some((&last, rest)) = parts.split_last() else {
        return u64::from(shape.is_empty());
    };
    shape
        .strips_removed(last)
        .iter()
        .map(|inner| chain_count(inner, rest))
        .sum()
}

/// Number of standard Young tableaux of shape lambda, by the hook-length
/// formula.
pub fn specht_dim(shape: &Partition) -> u64 {
    let n = shape.size() as u64;
    let mut numerator: BigUint = One::one();
    for k in 1..=n {
        numerator *= BigUint::from(k);
    }
    let conj = shape.conjugate();
    let mut hooks: BigUint = One::one();
    for (row, &len) in shape.parts().iter().enumerate() {
        for col in 0..len as usize {
            let arm = len as u64 - col as u64 - 1;
            let leg = conj.part(col) as u64 - row as u64 - 1;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    let (q, r) = num::Integer::div_rem(&numerator, &hooks);
    debug_assert!(num::Zero::is_zero(&r), "hook lengths must divide n!");
    u64::try_from(q).expect("Specht dimension fits in u64 at this scale")
}

/// Number of standard Young tableaux of shape lambda, by the corner-removal
/// recursion. Agrees with [`specht_dim`]; kept as an independent count.
pub fn syt_count(shape: &Partition) -> u64 {
    fn go(shape: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let v = shape.corners_removed().iter().map(|s| go(s, memo)).sum();
        memo.insert(shape.clone(), v);
        v
    }
    go(shape, &mut HashMap::new())
}

/// Number of standard tableaux of the skew shape outer/inner.
pub fn skew_syt_count(outer: &Partition, inner: &Partition) -> Result<u64, SymgrpError> {
    if !outer.contains(inner) {
        return Err(SymgrpError::NotContained { outer: outer.clone(), inner: inner.clone() });
    }
    fn go(outer: &Partition, inner: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
        if outer == inner {
            return 1;
        }
        if let Some(&v) = memo.get(outer) {
            return v;
        }
        let v = outer
            .corners_removed()
            .iter()
            .filter(|smaller| smaller.contains(inner))
            .map(|smaller| go(smaller, inner, memo))
            .sum();
        memo.insert(outer.clone(), v);
        v
    }
    Ok(go(outer, inner, &mut HashMap::new()))
}

/// Multiplicity of the trivial module in the skew Specht module of
/// outer/inner: 1 iff the skew shape is a horizontal strip (no column with
/// two cells), else 0.
pub fn skew_trivial_multiplicity(outer: &Partition, inner: &Partition) -> Result<u64, SymgrpError> {
    if !outer.contains(inner) {
        return Err(SymgrpError::NotContained { outer: outer.clone(), inner: inner.clone() });
    }
    Ok(u64::from(outer.horizontal_strip_over(inner)))
}

/// n! as an exact integer, for dimension identities.
pub fn factorial(n: u32) -> BigInt {
    let mut out: BigInt = One::one();
    for k in 1..=i64::from(n) {
        out *= BigInt::from(k);
    }
    out
}
