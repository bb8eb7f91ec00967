use std::collections::BTreeSet;

use proptest::prelude::*;
use rootideals::cells::{
    check_family_class_correspondence, check_family_class_correspondence_with, families, j_classes, j_heart,
    symbol_of, tau, two_core, two_quotient, Bipartition, CellsTable, Partition, RunnerConvention,
};

/// Partition counts by the usual recurrence on largest part.
fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

/// Boxes of even content minus boxes of odd content.
fn residue_balance(p: &Partition) -> i64 {
    let mut bal = 0;
    for (r, &len) in p.parts().iter().enumerate() {
        for c in 0..len as usize {
            bal += if Partition::content(r, c).rem_euclid(2) == 0 { 1 } else { -1 };
        }
    }
    bal
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

#[test]
fn bipartition_counts() {
    let p = partition_counts(8);
    for n in 0..=8u32 {
        let want: u64 = (0..=n as usize).map(|k| p[k] * p[n as usize - k]).sum();
        assert_eq!(Bipartition::all(n).len() as u64, want, "n = {n}");
        assert_eq!(Partition::all(n).len() as u64, p[n as usize], "n = {n}");
    }
}

#[test]
fn tau_is_a_bijection_onto_trivial_cores() {
    for n in 0..=8 {
        let images: Vec<Partition> = Bipartition::all(n).iter().map(tau).collect();
        let set: BTreeSet<&Partition> = images.iter().collect();
        assert_eq!(set.len(), images.len(), "n = {n}");
        let trivial: BTreeSet<Partition> = Partition::all(2 * n).into_iter().filter(|q| residue_balance(q) == 0).collect();
        assert_eq!(set, trivial.iter().collect(), "n = {n}");
        for bp in Bipartition::all(n) {
            let q = tau(&bp);
            assert!(two_core(&q).is_empty());
            assert_eq!(two_quotient(&q), bp);
        }
    }
}

#[test]
fn families_match_classes() {
    for n in 1..=8 {
        assert!(check_family_class_correspondence(n), "n = {n}");
        assert_eq!(families(n).len(), j_classes(n).len(), "n = {n}");
        let table = CellsTable::build(n);
        assert_eq!(table.rows.len(), Bipartition::all(n).len());
        assert_eq!(table.distinct_hearts(), j_classes(n).len());
    }
    for n in 2..=5 {
        assert!(!check_family_class_correspondence_with(n, RunnerConvention::LambdaEven), "n = {n}");
    }
}

#[test]
fn symbols_are_valid_and_distinct() {
    for n in 0..=7 {
        let mut seen = BTreeSet::new();
        for bp in Bipartition::all(n) {
            let s = symbol_of(&bp);
            assert!(s.is_valid(), "{bp}");
            assert_eq!(s.defect(), 1, "{bp}");
            assert!(seen.insert(s.to_string()), "{bp}");
            for m in 0..3 {
                assert_eq!(s.shifted_to(s.bottom.len() + m).a_value(), s.a_value(), "{bp}");
            }
        }
    }
}

#[test]
fn a_value_constant_on_families() {
    for n in 1..=6 {
        for fam in families(n) {
            let a: BTreeSet<u64> = fam.iter().map(|bp| symbol_of(bp).a_value()).collect();
            assert_eq!(a.len(), 1, "n = {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn core_matches_residue_balance(p in partition(12)) {
        let core = two_core(&p);
        prop_assert_eq!(residue_balance(&core), residue_balance(&p));
        let k = core.len() as u32;
        prop_assert_eq!(core.parts().to_vec(), (1..=k).rev().collect::<Vec<u32>>());
        prop_assert_eq!(core.is_empty(), residue_balance(&p) == 0);
        prop_assert_eq!((p.size() - core.size()) % 2, 0);
    }

    #[test]
    fn heart_is_idempotent_and_stable(p in partition(8)) {
        let h = j_heart(&p);
        prop_assert_eq!(j_heart(&h), h.clone());
        prop_assert!(h.size() <= p.size());
        for (r, c) in h.removable_boxes() {
            prop_assert!(Partition::content(r, c).rem_euclid(2) != 0);
        }
    }

    #[test]
    fn beta_numbers_round_trip(p in partition(10), extra in 0usize..4) {
        let beta = p.beta_numbers(p.len() + extra);
        prop_assert_eq!(Partition::from_beta_numbers(&beta), p);
    }
}
