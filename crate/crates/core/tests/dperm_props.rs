use ferrochi_core::dperm::{
    char_poly_via_dperms, chromatic_via_dperms, cycle_count_distribution, default_r, dowling_char_via_enumeration,
    enumerate_qlabeled_dperms, enumerate_qlabeled_id_forests, qlabeled_counts_by_cycles, qlabeled_id_forest_counts,
};
use ferrochi_core::ferrers::{canonical_set, gamma_graph};
use ferrochi_core::lattice::{bond_char_poly, build_arrangement_nu, regions};
use ferrochi_core::{Limits, PositiveIntSet, UniPoly, WeakComposition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn subsets(n: u32) -> impl Iterator<Item = PositiveIntSet> {
    (1u32..1 << n).map(move |mask| PositiveIntSet::new((1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap())
}

fn bond_chi(v: &PositiveIntSet) -> UniPoly {
    bond_char_poly(&gamma_graph(v).to_simple().unwrap(), &Limits::default()).unwrap()
}

#[test]
fn dperms_match_bond_lattice_on_small_sets() {
    let lim = Limits::default();
    for v in subsets(7) {
        let chi = char_poly_via_dperms(&v, &lim).unwrap();
        assert_eq!(chi, bond_chi(&v), "{v}");
        assert_eq!(chromatic_via_dperms(&v, &lim).unwrap(), chi.shift_degree(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dperms_match_bond_lattice_up_to_eight(elems in prop::collection::btree_set(1u32..=12, 1..=8)) {
        let v = PositiveIntSet::new(elems).unwrap();
        prop_assert_eq!(char_poly_via_dperms(&v, &Limits::default()).unwrap(), bond_chi(&v));
    }
}

#[test]
fn labeled_dperms_match_labeled_forests() {
    let lim = Limits::default();
    for v in subsets(6) {
        for q in 1..=3 {
            for r in [default_r(&v), 3] {
                let a = qlabeled_counts_by_cycles(&v, r, q, &lim).unwrap();
                let b = qlabeled_id_forest_counts(&v, r, q, &lim).unwrap();
                assert_eq!(a, b, "{v} r={r} q={q}");
            }
        }
    }
}

#[test]
fn labeled_objects_are_counted_once() {
    let lim = Limits::default();
    let v = PositiveIntSet::new([1, 2, 3, 4]).unwrap();
    for q in 1..=3 {
        let perms = enumerate_qlabeled_dperms(&v, 2, q, &lim).unwrap();
        let forests = enumerate_qlabeled_id_forests(&v, 2, q, &lim).unwrap();
        let total: BigInt = qlabeled_counts_by_cycles(&v, 2, q, &lim).unwrap().into_iter().sum();
        assert_eq!(BigInt::from(perms.len()), total);
        assert_eq!(perms.len(), forests.len());
        let mut dedup = perms.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), perms.len());
    }
}

#[test]
fn unlabeled_dowling_is_plain_characteristic_polynomial() {
    let lim = Limits::default();
    for parts in [&[1][..], &[2], &[1, 1], &[2, 1], &[1, 2], &[3, 0], &[1, 0, 2]] {
        let nu = WeakComposition::new(parts.iter().copied()).unwrap();
        let v = canonical_set(&nu).unwrap();
        assert_eq!(
            dowling_char_via_enumeration(&nu, 1, &lim).unwrap(),
            char_poly_via_dperms(&v, &lim).unwrap()
        );
    }
}

#[test]
fn region_counts_from_minus_one() {
    let lim = Limits::default();
    for parts in [&[1][..], &[2], &[1, 1], &[2, 1], &[1, 2], &[1, 0], &[1, 1, 1]] {
        let nu = WeakComposition::new(parts.iter().copied()).unwrap();
        let v = canonical_set(&nu).unwrap();
        let chi = char_poly_via_dperms(&v, &lim).unwrap();
        let rank = v.len() as u32 - 1;
        let value = chi.eval(&BigInt::from(-1));
        let signed = if rank.is_multiple_of(2) { value } else { -value };
        assert_eq!(signed, regions(&build_arrangement_nu(&nu, &lim).unwrap(), &lim).unwrap(), "{parts:?}");
    }
}

/// D-permutations by cycle number, by filtering every permutation.
fn brute_force_cycle_counts(v: &PositiveIntSet) -> Vec<BigInt> {
    fn go(v: &[u32], used: &mut Vec<bool>, img: &mut Vec<usize>, out: &mut Vec<BigInt>) {
        let i = img.len();
        if i == v.len() {
            let mut seen = vec![false; v.len()];
            let mut cycles = 0;
            for s in 0..v.len() {
                if !seen[s] {
                    cycles += 1;
                    let mut x = s;
                    while !seen[x] {
                        seen[x] = true;
                        x = img[x];
                    }
                }
            }
            out[cycles] += 1;
            return;
        }
        for j in 0..v.len() {
            let ok = if v[i] % 2 == 1 { v[j] >= v[i] } else { v[j] <= v[i] };
            if used[j] || !ok {
                continue;
            }
            used[j] = true;
            img.push(j);
            go(v, used, img, out);
            img.pop();
            used[j] = false;
        }
    }
    let mut out = vec![BigInt::from(0); v.len() + 1];
    go(v.elements(), &mut vec![false; v.len()], &mut Vec::new(), &mut out);
    out
}

#[test]
fn cycle_counts_match_brute_force() {
    let lim = Limits::default();
    for v in subsets(8).filter(|v| v.len() >= 6) {
        assert_eq!(cycle_count_distribution(&v, &lim).unwrap(), brute_force_cycle_counts(&v), "{v}");
    }
}
