//! Cross-validation of the two models of the quiver Hecke algebra: the
//! diagram-basis multiplication must agree with operator composition in
//! the faithful polynomial representation, on randomized products.

use bozec_klr::cartan::{abc_datum, AlphabetMode, Datum, StrandLabel};
use bozec_klr::klr::{BasisDiagram, KLRElement, KlrAlgebra, Perm, PolyAction, PolyVec};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn alphabet(datum: &Datum) -> Vec<StrandLabel> {
    vec![
        StrandLabel::plain(datum, 0).unwrap(),
        StrandLabel::plain(datum, 1).unwrap(),
        StrandLabel::new(datum, 2, 1, AlphabetMode::Full).unwrap(),
        StrandLabel::new(datum, 2, 2, AlphabetMode::Full).unwrap(),
    ]
}

fn random_diagram(rng: &mut ChaCha8Rng, source: Vec<StrandLabel>, budget: u32) -> BasisDiagram {
    let n = source.len();
    let perms = Perm::all(n);
    let perm = perms[rng.gen_range(0..perms.len())].clone();
    let mut exps = vec![0u32; n];
    let mut left = budget;
    for e in exps.iter_mut() {
        let take = rng.gen_range(0..=left);
        *e = take;
        left -= take;
    }
    BasisDiagram { source, exps, perm }
}

/// Test vectors spanning enough of the component to distinguish the
/// operators arising from three strands of degree at most six.
fn probe_vectors(source: &[StrandLabel]) -> Vec<PolyVec> {
    let n = source.len();
    let mut out = vec![PolyVec::monomial(source.to_vec(), vec![0; n])];
    for p in 0..n {
        let mut u = vec![0; n];
        u[p] = 1;
        out.push(PolyVec::monomial(source.to_vec(), u.clone()));
        u[p] = 3;
        out.push(PolyVec::monomial(source.to_vec(), u));
    }
    out
}

#[test]
fn random_products_match_the_polynomial_representation() {
    let datum = abc_datum();
    let algebra = KlrAlgebra::new(datum.clone());
    let action = PolyAction::new(datum.clone());
    let letters = alphabet(&datum);
    let mut rng = ChaCha8Rng::seed_from_u64(0xB02EC);

    for round in 0..50 {
        let n = rng.gen_range(1..=3usize);
        let src_b: Vec<StrandLabel> = (0..n)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect();
        let db = random_diagram(&mut rng, src_b.clone(), 3);
        // The left factor must start where the right factor ends.
        let src_a = db.target();
        let da = random_diagram(&mut rng, src_a, 3);

        let a = KLRElement::from_diagram(da.clone());
        let b = KLRElement::from_diagram(db.clone());
        let product = algebra.mul(&a, &b).unwrap();

        for v in probe_vectors(&src_b) {
            let via_product = action.apply(&product, &v).unwrap();
            let via_composition = action.apply(&a, &action.apply(&b, &v).unwrap()).unwrap();
            assert_eq!(
                via_product, via_composition,
                "round {round}: {da:?} * {db:?} disagrees on {v:?}"
            );
        }

        if !product.is_zero() {
            let da_deg = KLRElement::from_diagram(da.clone()).degree(&datum).unwrap();
            let db_deg = KLRElement::from_diagram(db.clone()).degree(&datum).unwrap();
            assert_eq!(
                product.degree(&datum).unwrap(),
                Some(da_deg.unwrap() + db_deg.unwrap()),
                "round {round}: degree must add on products"
            );
        }
    }
}

#[test]
fn flip_reverses_random_products() {
    let datum = abc_datum();
    let algebra = KlrAlgebra::new(datum.clone());
    let letters = alphabet(&datum);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);

    for round in 0..20 {
        let n = rng.gen_range(2..=3usize);
        let src_b: Vec<StrandLabel> = (0..n)
            .map(|_| letters[rng.gen_range(0..letters.len())])
            .collect();
        let db = random_diagram(&mut rng, src_b, 2);
        let da = random_diagram(&mut rng, db.target(), 2);
        let a = KLRElement::from_diagram(da);
        let b = KLRElement::from_diagram(db);
        let product = algebra.mul(&a, &b).unwrap();
        let flipped = algebra.psi(&product).unwrap();
        let reversed = algebra
            .mul(&algebra.psi(&b).unwrap(), &algebra.psi(&a).unwrap())
            .unwrap();
        assert_eq!(flipped, reversed, "round {round}");
    }
}
