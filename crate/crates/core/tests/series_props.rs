use colorcoh::series::{recognize, RationalSeries, Recognition};
use proptest::prelude::*;

fn table_series() -> Vec<RationalSeries> {
    let s = |n: &[i64], d: &[i64]| RationalSeries::new(n, d).unwrap();
    let one_z = s(&[1, 1], &[1]);
    vec![
        s(&[1, 1], &[1, -1]),
        s(&[1], &[1, -1]),
        s(&[1, 1], &[1, 0, 0, -1]),
        s(&[1, 1], &[1, 0, 0, 0, 0, 0, 0, 0, -1]),
        one_z.add(&s(&[0, 0, 0, 1, 1], &[1, 0, 0, 0, 0, 0, -1])),
        s(&[1, 0, 0, 1], &[1]),
        s(&[1, 2, 2, 1], &[1]),
    ]
}

#[test]
fn table_series_round_trip() {
    for rs in table_series() {
        assert_eq!(recognize(&rs.expand(40)), Recognition::Series(rs.clone()), "{rs}");
    }
}

proptest! {
    #[test]
    fn accepted_sequences_expand_back(seq in prop::collection::vec(-3i64..=3, 1..41)) {
        if let Recognition::Series(rs) = recognize(&seq) {
            prop_assert_eq!(rs.expand(seq.len() - 1), seq);
        }
    }

    #[test]
    fn finite_support_is_polynomial(mut head in prop::collection::vec(-5i64..=5, 1..8)) {
        let len = head.len();
        head.resize(len + 30, 0);
        match recognize(&head) {
            Recognition::Series(rs) => {
                prop_assert!(rs.is_polynomial());
                prop_assert_eq!(rs.expand(head.len() - 1), head);
            }
            Recognition::Inconclusive => prop_assert!(false, "polynomial not recognized"),
        }
    }

    #[test]
    fn periodic_rational_round_trip(num in prop::collection::vec(-2i64..=2, 1..4), k in 1usize..=6) {
        let mut den = vec![0; k + 1];
        den[0] = 1;
        den[k] = -1;
        let rs = RationalSeries::new(&num, &den).unwrap();
        prop_assert_eq!(recognize(&rs.expand(40)), Recognition::Series(rs));
    }
}
