use ferrochi_core::ferrers::partition_type;
use ferrochi_core::staircase::{
    count_staircases, enumerate_staircases, is_staircase, lambda_enum, lambda_rec, dperm_specialization_sides,
    verify_top_row_bijection, StaircaseSet,
};
use ferrochi_core::{Limits, PositiveIntSet};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn even_max_subsets(n: u32) -> impl Iterator<Item = PositiveIntSet> {
    (1u32..1 << n)
        .map(move |mask| PositiveIntSet::new((1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap())
        .filter(PositiveIntSet::has_even_max)
}

#[test]
fn recurrence_matches_enumeration() {
    let lim = Limits::default();
    let mut ell_zero = 0;
    for v in even_max_subsets(9).filter(|v| v.even_part().len() <= 3) {
        let s = StaircaseSet::new(v).unwrap();
        if s.ell_rec() == 0 {
            ell_zero += 1;
        }
        assert_eq!(lambda_enum(&s, &lim).unwrap(), lambda_rec(&s), "{}", s.set());
    }
    assert!(ell_zero > 0);
}

#[test]
fn lambda_depends_only_on_partition_type() {
    let mut seen: BTreeMap<_, _> = BTreeMap::new();
    for v in even_max_subsets(10).filter(|v| v.elements()[0] % 2 == 1) {
        let lambda = partition_type(&v).unwrap();
        let value = lambda_rec(&StaircaseSet::new(v.clone()).unwrap());
        if let Some((w, prev)) = seen.get(&lambda) {
            assert_eq!(&value, prev, "{v} vs {w}");
        } else {
            seen.insert(lambda, (v, value));
        }
    }
}

#[test]
fn lambda_at_ones_counts_staircases() {
    let lim = Limits::default();
    for v in even_max_subsets(8) {
        let s = StaircaseSet::new(v).unwrap();
        let n = count_staircases(&s, &lim).unwrap();
        assert_eq!(lambda_rec(&s).eval_ones(), BigInt::from(n), "{}", s.set());
    }
}

#[test]
fn dperm_specialization_on_subsets_of_six() {
    let lim = Limits::default();
    for v in even_max_subsets(6) {
        for k in 1..=3 {
            let (lhs, rhs) = dperm_specialization_sides(&v, k, &lim).unwrap();
            assert_eq!(lhs, rhs, "{v} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn enumerated_staircases_are_valid(elems in prop::collection::btree_set(1u32..=9, 1..=7)) {
        let v = PositiveIntSet::new(elems).unwrap();
        prop_assume!(v.has_even_max());
        let s = StaircaseSet::new(v).unwrap();
        let all = enumerate_staircases(&s, &Limits::default()).unwrap();
        for f in &all {
            prop_assert!(is_staircase(&s, f));
        }
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn top_row_bijection(elems in prop::collection::btree_set(1u32..=9, 2..=7)) {
        let v = PositiveIntSet::new(elems).unwrap();
        prop_assume!(v.has_even_max());
        let s = StaircaseSet::new(v).unwrap();
        prop_assume!(s.prime().is_some());
        let report = verify_top_row_bijection(&s, &Limits::default()).unwrap();
        prop_assert!(report.holds(), "{:?}", report.counterexample);
    }
}
