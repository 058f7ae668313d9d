use num_bigint::BigInt;
use partition_identity::partitions::{for_each_partition, Partition};
use partition_identity::recurrence::SeriesMemo;
use partition_identity::TriPoly;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = TriPoly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, -6i64..=6), 0..6)
        .prop_map(TriPoly::from_terms)
}

fn counting_poly() -> impl Strategy<Value = TriPoly> {
    prop::collection::vec((1i64..=4, 0u32..3, 0u32..3, 0i64..=12), 0..6)
        .prop_map(TriPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn addition_is_an_abelian_group(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &TriPoly::zero(), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_and_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &TriPoly::one(), p.clone());
        prop_assert!((&p * &TriPoly::zero()).is_zero());
    }

    #[test]
    fn no_zero_coefficients_are_stored(p in poly(), q in poly()) {
        for r in [&p + &q, &p - &q, &p * &q] {
            prop_assert!(r.iter().all(|(_, c)| *c != BigInt::from(0)));
            prop_assert_eq!(r.is_zero(), r.is_empty());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn shift_is_a_ring_homomorphism(p in poly(), q in poly(), s in -7i64..=7, t in -7i64..=7) {
        prop_assert_eq!((&p * &q).shift(s, t), &p.shift(s, t) * &q.shift(s, t));
        prop_assert_eq!((&p + &q).shift(s, t), &p.shift(s, t) + &q.shift(s, t));
        prop_assert_eq!(p.shift(s, t).shift(-s, -t), p.clone());
    }

    #[test]
    fn truncated_product_matches_full_product(p in poly(), q in poly(), cut in -12i64..=24) {
        prop_assert_eq!(p.mul_truncated(&q, cut), (&p * &q).truncate(cut));
    }

    #[test]
    fn truncation_commutes_with_products_of_counting_series(p in counting_poly(), q in counting_poly(), cut in 0i64..=24) {
        let lhs = (&p * &q).truncate(cut);
        let rhs = (&p.truncate(cut) * &q.truncate(cut)).truncate(cut);
        prop_assert_eq!(lhs, rhs);
        prop_assert!((&p * &q).is_counting_series() || (&p * &q).is_zero());
    }

    #[test]
    fn json_and_text_round_trip(p in poly()) {
        let back = TriPoly::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_text(), p.to_text());
        let exps: Vec<_> = p.iter().map(|(e, _)| (e.q, e.a, e.b)).collect();
        let mut sorted = exps.clone();
        sorted.sort();
        prop_assert_eq!(exps, sorted);
    }

    #[test]
    fn difference_conditions_are_hereditary(parts in prop::collection::vec(1u32..=36, 0..9)) {
        let p = Partition::new(parts).unwrap();
        if p.is_valid_b() && !p.is_empty() {
            let mut rest = p.parts().to_vec();
            rest.pop();
            prop_assert!(Partition::new(rest).unwrap().is_valid_b());
        }
    }

    #[test]
    fn product_side_is_closed_under_removing_any_part(parts in prop::collection::vec(1u32..=36, 0..9), k in 0usize..9) {
        let p = Partition::new(parts).unwrap();
        if p.is_valid_a() && !p.is_empty() {
            let mut rest = p.parts().to_vec();
            rest.remove(k % rest.len());
            prop_assert!(Partition::new(rest).unwrap().is_valid_a());
        }
    }
}

#[test]
fn every_valid_b_partition_up_to_thirty_stays_valid_when_its_smallest_part_goes() {
    let mut seen = 0;
    for n in 0..=30 {
        for_each_partition(n, n, |parts| {
            let p = Partition::new(parts.to_vec()).unwrap();
            if p.is_valid_b() && !p.is_empty() {
                seen += 1;
                let mut rest = parts.to_vec();
                rest.pop();
                assert!(Partition::new(rest).unwrap().is_valid_b(), "{parts:?}");
            }
        });
    }
    assert!(seen > 100);
}

#[test]
fn recurrence_coefficients_stabilize_in_n() {
    let mut memo = SeriesMemo::new();
    let levels: Vec<TriPoly> = (0..6).map(|n| TriPoly::clone(&memo.get(n, 15))).collect();
    for n in 0..5 {
        let cut = 6 * n as i64 + 6;
        assert_eq!(
            levels[n].truncate(cut),
            levels[n + 1].truncate(cut),
            "n={n}"
        );
        for m in n + 1..6 {
            assert_eq!(levels[n].truncate(cut), levels[m].truncate(cut));
        }
    }
}

#[test]
fn recurrence_outputs_are_counting_series() {
    let mut memo = SeriesMemo::new();
    for n in -1..=5 {
        for j in 0..16 {
            assert!(memo.get(n, j).is_counting_series(), "S_{n}({j})");
        }
    }
}
