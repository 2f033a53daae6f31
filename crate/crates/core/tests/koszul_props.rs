mod common;

use colorcoh::koszul::{dual_of, quadratic_dual, DgaElement, DualMonomial, SignAlgebra};
use colorcoh::Scalar;
use common::{all_sign_matrices, catalog_algebras};
use proptest::prelude::*;

fn capped(a: &SignAlgebra, exps: [u32; 3]) -> DualMonomial {
    DualMonomial(
        exps.iter()
            .enumerate()
            .map(|(i, &e)| if a.is_square_zero(i) { e.min(1) } else { e })
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn multiplication_is_associative(
        x in prop::array::uniform3(0u32..3),
        y in prop::array::uniform3(0u32..3),
        z in prop::array::uniform3(0u32..3),
    ) {
        for (id, g) in catalog_algebras() {
            let a = dual_of(&g);
            let m = |e| DgaElement::monomial(capped(&a, e), Scalar::one());
            let (x, y, z) = (m(x), m(y), m(z));
            prop_assert_eq!(
                a.multiply(&a.multiply(&x, &y), &z),
                a.multiply(&x, &a.multiply(&y, &z)),
                "entry {}", id
            );
        }
    }

    #[test]
    fn words_agree_with_products(word in prop::collection::vec(0usize..3, 0..6), bits in 0u8..64) {
        let a = SignAlgebra::enveloping(&common::signs_from_bits(bits)).dual();
        let mut acc = DgaElement::one(3);
        for &i in &word {
            acc = a.multiply(&acc, &DgaElement::generator(3, i));
        }
        prop_assert_eq!(a.word(&word), acc);
    }
}

#[test]
fn hilbert_counts_all_sign_matrices() {
    for cm in all_sign_matrices() {
        for a in [SignAlgebra::enveloping(&cm), SignAlgebra::enveloping(&cm).dual()] {
            let h = a.hilbert_series().expand(10);
            for d in 0..=10u32 {
                assert_eq!(a.monomial_basis(d).len() as i64, h[d as usize], "{a} degree {d}");
            }
        }
    }
}

#[test]
fn dual_is_an_involution_and_koszul() {
    for cm in all_sign_matrices() {
        let a = SignAlgebra::enveloping(&cm);
        assert_eq!(quadratic_dual(&quadratic_dual(&a)), a);
        let product = a
            .hilbert_series()
            .mul(&a.dual().hilbert_series().at_minus_z())
            .expand(10);
        let mut one = vec![0; 11];
        one[0] = 1;
        assert_eq!(product, one, "{a}");
    }
}
