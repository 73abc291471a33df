use proptest::prelude::*;

use qcdesign::gray::{construct, GeneratorMatrix, Parity};
use qcdesign::regsel::{fold_wlp_identities, regular_wlp, BinaryMatrix};
use qcdesign::wlp::{is_group_invariant, wlp_direct, wlp_distance};
use qcdesign::z4::{ReferenceKind, ReferenceSet};

// at least two members (odd designs need them) of of the reference set, in a shuffled order
fn generator(n: usize) -> impl Strategy<Value = GeneratorMatrix> {
    let all = ReferenceSet::new(n, ReferenceKind::Full).unwrap().vectors;
    let len = all.len();
    proptest::sample::subsequence(all, 2..=len.min(8))
        .prop_shuffle()
        .prop_map(move |cols| GeneratorMatrix::new(n, cols).unwrap())
}

fn b_matrix(rows: usize) -> impl Strategy<Value = BinaryMatrix> {
    let pool: Vec<u32> = (1..1u32 << rows).collect();
    let len = pool.len();
    proptest::sample::subsequence(pool, 1..=len).prop_map(move |m| BinaryMatrix::new(rows, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn direct_and_distance_agree(g in prop_oneof![generator(2), generator(3)], odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let d = construct(&g, parity).unwrap();
        prop_assert!(is_group_invariant(&d));
        let k = d.factors().min(5);
        prop_assert_eq!(wlp_direct(&d, k).unwrap(), wlp_distance(&d).unwrap().truncated(k));
    }

    #[test]
    fn gray_designs_have_strength_two(g in generator(3), odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let d = construct(&g, parity).unwrap();
        let w = wlp_distance(&d).unwrap();
        for k in 1..=2.min(d.factors()) {
            prop_assert!(w.integer_u64(k) == 0);
        }
    }

    #[test]
    fn regular_word_count(b in b_matrix(4)) {
        let w = regular_wlp(&b);
        prop_assert_eq!(w.total(), 1u64 << (b.cols() - b.rank()));
        prop_assert_eq!(w.a(1), 0);
    }

    #[test]
    fn foldover_identities(b in b_matrix(3)) {
        prop_assert!(fold_wlp_identities(&b).unwrap().all());
    }
}
