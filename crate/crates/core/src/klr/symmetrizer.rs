//! Symmetrizer idempotents on a block of equal strands: full averaging
//! over crossings for an isotropic index, and the divided-power
//! idempotent for a real index.

use num::BigRational;

use crate::cartan::{Datum, IndexType, StrandLabel};
use crate::klr::basis::{BasisDiagram, KLRElement};
use crate::klr::perm::Perm;
use crate::klr::KlrError;

/// `(1/n!) Σ_ω τ_ω` on `n` strands of an isotropic index.  Crossings of
/// equal isotropic strands square to one and braid exactly, so each
/// summand is the basis diagram of its permutation.
pub fn averaging_idempotent(
    datum: &Datum,
    index: usize,
    n: u32,
) -> Result<KLRElement, KlrError> {
    if datum.index_type(index) != IndexType::Isotropic {
        return Err(KlrError::UnsupportedShape(format!(
            "averaging idempotent needs an isotropic index, got {}",
            datum.name(index)
        )));
    }
    let label = StrandLabel::plain(datum, index)?;
    let source = vec![label; n as usize];
    let order: i64 = (1..=n as i64).product();
    let coeff = BigRational::from_integer(1.into()) / BigRational::from_integer(order.into());
    let mut out = KLRElement::zero();
    for perm in Perm::all(n as usize) {
        out.add_term(
            BasisDiagram {
                source: source.clone(),
                exps: vec![0; n as usize],
                perm,
            },
            coeff.clone(),
        );
    }
    Ok(out)
}

/// `x_1^{n-1} x_2^{n-2} ... x_{n-1} τ_{w_0}` on `n` strands of a real
/// index: the degree-zero idempotent cutting out the divided power.
pub fn divided_power_idempotent(
    datum: &Datum,
    index: usize,
    n: u32,
) -> Result<KLRElement, KlrError> {
    if datum.index_type(index) != IndexType::Real {
        return Err(KlrError::UnsupportedShape(format!(
            "divided-power idempotent needs a real index, got {}",
            datum.name(index)
        )));
    }
    let label = StrandLabel::plain(datum, index)?;
    let n = n as usize;
    let longest = Perm::from_images((0..n).rev().collect());
    Ok(KLRElement::from_diagram(BasisDiagram {
        source: vec![label; n],
        exps: (0..n).rev().map(|k| k as u32).collect(),
        perm: longest,
    }))
}

/// The symmetrizer matching the index type; non-isotropic imaginary
/// indices carry no symmetrizer.
pub fn symmetrizer(datum: &Datum, index: usize, n: u32) -> Result<KLRElement, KlrError> {
    match datum.index_type(index) {
        IndexType::Real => divided_power_idempotent(datum, index, n),
        IndexType::Isotropic => averaging_idempotent(datum, index, n),
        IndexType::NonIsotropic => Err(KlrError::UnsupportedShape(format!(
            "no symmetrizer on non-isotropic index {}",
            datum.name(index)
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::abc_datum;
    use crate::klr::engine::KlrAlgebra;

    #[test]
    fn both_flavors_are_degree_zero_idempotents() {
        let datum = abc_datum();
        let algebra = KlrAlgebra::new(datum.clone());
        for n in 1..=4u32 {
            for index in [0usize, 1] {
                let e = symmetrizer(&datum, index, n).unwrap();
                assert_eq!(e.degree(&datum).unwrap(), Some(0), "index {index}, n {n}");
                let square = algebra.mul(&e, &e).unwrap();
                assert_eq!(square, e, "index {index}, n {n}");
            }
        }
    }

    #[test]
    fn flip_fixes_the_averaging_idempotent() {
        let datum = abc_datum();
        let algebra = KlrAlgebra::new(datum.clone());
        let e = averaging_idempotent(&datum, 1, 3).unwrap();
        assert_eq!(algebra.psi(&e).unwrap(), e);
    }

    #[test]
    fn flipped_divided_idempotent_is_still_idempotent() {
        let datum = abc_datum();
        let algebra = KlrAlgebra::new(datum.clone());
        let e = divided_power_idempotent(&datum, 0, 3).unwrap();
        let flipped = algebra.psi(&e).unwrap();
        assert_ne!(flipped, e);
        assert_eq!(algebra.mul(&flipped, &flipped).unwrap(), flipped);
    }

    #[test]
    fn wrong_index_types_are_rejected() {
        let datum = abc_datum();
        assert!(averaging_idempotent(&datum, 0, 2).is_err());
        assert!(divided_power_idempotent(&datum, 1, 2).is_err());
        assert!(symmetrizer(&datum, 2, 2).is_err());
    }
}
