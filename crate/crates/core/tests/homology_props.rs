mod common;

use colorcoh::color::ColorLieAlgebra;
use colorcoh::dga::{Differential, LeibnizSign};
use colorcoh::homology::{betti, betti_of, cup_product, h1_dimension_check, representatives, CohomologyClass};
use colorcoh::series::RationalSeries;
use colorcoh::{catalog, Scalar};
use common::{all_sign_matrices, random_algebra, rational_catalog_algebras};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rescale(g: &ColorLieAlgebra, l: &[Scalar]) -> ColorLieAlgebra {
    let brackets = g.brackets().iter().map(|(&(i, j), v)| {
        let w = v
            .iter()
            .enumerate()
            .map(|(k, c)| (&(c * &l[i]) * &l[j]).checked_div(&l[k]).unwrap())
            .collect();
        (i, j, w)
    });
    ColorLieAlgebra::new(g.signs().clone(), brackets).unwrap()
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    (prop_oneof![-4i64..=-1, 1i64..=4], 1i64..=3).prop_map(|(p, q)| Scalar::ratio(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn betti_invariant_under_rescaling(id in 1u8..=15, l in prop::collection::vec(nonzero_rational(), 3)) {
        let g = rational_catalog_algebras().remove(id as usize - 1).1;
        let h = rescale(&g, &l);
        for rule in [LeibnizSign::Homological, LeibnizSign::Color] {
            prop_assert_eq!(betti_of(&g, 8, rule).unwrap(), betti_of(&h, 8, rule).unwrap());
        }
    }
}

#[test]
fn h0_and_h1() {
    for (id, g) in rational_catalog_algebras() {
        let t = betti_of(&g, 1, LeibnizSign::Homological).unwrap();
        assert_eq!(t.h[0], 1, "entry {id}");
        assert!(h1_dimension_check(&g).unwrap(), "entry {id}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for cm in all_sign_matrices() {
        let g = random_algebra(&mut rng, &cm, 0.3);
        if g.validate().is_valid() {
            assert_eq!(betti_of(&g, 0, LeibnizSign::Homological).unwrap().h, [1]);
            assert!(h1_dimension_check(&g).unwrap());
        }
    }
}

#[test]
fn abelian_closed_form() {
    for m in catalog::abelian_family(3) {
        let want: Vec<usize> = RationalSeries::abelian_closed_form(3, m.q)
            .expand(10)
            .iter()
            .map(|&x| x as usize)
            .collect();
        for rule in [LeibnizSign::Homological, LeibnizSign::Color] {
            assert_eq!(betti_of(&m.algebra(), 10, rule).unwrap().h, want, "{}", m.label());
        }
    }
}

#[test]
fn euler_characteristic_when_finite() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut checked = 0;
    let finite = all_sign_matrices().filter(|cm| cm.square_count() == 0);
    let mut algebras: Vec<ColorLieAlgebra> = rational_catalog_algebras().into_iter().map(|(_, g)| g).collect();
    for cm in finite {
        for _ in 0..5 {
            algebras.push(random_algebra(&mut rng, &cm, 0.4));
        }
    }
    for g in algebras
        .iter()
        .filter(|g| g.signs().square_count() == 0 && g.validate().is_valid())
    {
        let d = Differential::from_brackets(g, LeibnizSign::Homological);
        let t = betti(&d, 4).unwrap();
        let chain: i64 = (0..=4u32)
            .map(|n| (-1i64).pow(n) * d.ambient().monomial_basis(n).len() as i64)
            .sum();
        let homology: i64 =
            t.h.iter()
                .enumerate()
                .map(|(n, &h)| (-1i64).pow(n as u32) * h as i64)
                .sum();
        assert_eq!(chain, homology, "{g:?}");
        checked += 1;
    }
    assert!(checked >= 20);
}

#[test]
fn cup_product_is_associative() {
    for id in [2u8, 3, 4, 5, 7, 8, 11, 13, 14] {
        let g = catalog::load(id, None).unwrap();
        let d = Differential::from_brackets(&g, LeibnizSign::Homological);
        let classes: Vec<CohomologyClass> = (0..=2).flat_map(|n| representatives(&d, n).unwrap()).collect();
        let mul = |a: Option<CohomologyClass>, b: &CohomologyClass| a.and_then(|a| cup_product(&d, &a, b).unwrap());
        for a in &classes {
            for b in &classes {
                for c in &classes {
                    let left = mul(mul(Some(a.clone()), b), c);
                    let bc = cup_product(&d, b, c).unwrap();
                    let right = bc.and_then(|bc| cup_product(&d, a, &bc).unwrap());
                    assert_eq!(left, right, "entry {id}");
                }
            }
        }
    }
}
