use ferrochi_core::ferrers::{
    canonical_set, composition_from_partition, ferrers_isomorphic, gamma_graph, graph_from_composition, partition_type, v_from_partition,
};
use ferrochi_core::{BipartiteGraph, IntegerPartition, PositiveIntSet, WeakComposition};
use proptest::prelude::*;

fn partitions_in_box(parts: usize, size: u32) -> Vec<IntegerPartition> {
    fn go(max: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if !cur.is_empty() {
            out.push(IntegerPartition::new(cur.clone()).unwrap());
        }
        if left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, parts, &mut Vec::new(), &mut out);
    out
}

/// Subsets of `[n]` with an odd minimum and an even maximum.
fn ferrers_sets(n: u32, max_evens: usize) -> Vec<PositiveIntSet> {
    (1u32..1 << n)
        .map(|mask| PositiveIntSet::new((1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap())
        .filter(|s| s.elements()[0] % 2 == 1 && s.has_even_max() && s.even_part().len() <= max_evens)
        .collect()
}

#[test]
fn partition_round_trip() {
    let all = partitions_in_box(6, 6);
    assert_eq!(all.len(), 923);
    for lambda in all {
        let v = v_from_partition(&lambda).unwrap();
        assert_eq!(partition_type(&v).unwrap(), lambda);
        let nu = composition_from_partition(&lambda).unwrap();
        assert_eq!(nu.partition().unwrap(), lambda);
        assert_eq!(canonical_set(&nu).unwrap(), v);
    }
}

/// Isomorphism mapping columns to columns and rows to rows: try every
/// column permutation and compare the multisets of row neighborhoods.
fn side_preserving_isomorphic(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    if a.columns.len() != b.columns.len() || a.rows.len() != b.rows.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let hoods = |g: &BipartiteGraph, perm: &[usize]| {
        let mut rows = vec![0u32; g.rows.len()];
        for &(c, r) in &g.edges {
            rows[r] |= 1 << perm[c];
        }
        rows.sort_unstable();
        rows
    };
    let ident: Vec<usize> = (0..b.columns.len()).collect();
    let target = hoods(b, &ident);
    let mut perm = ident.clone();
    loop {
        if hoods(a, &perm) == target {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn isomorphic_exactly_when_same_type() {
    let sets = ferrers_sets(9, 4);
    let bip: Vec<_> = sets.iter().map(gamma_graph).collect();
    let graphs: Vec<_> = bip.iter().map(|g| g.to_simple().unwrap()).collect();
    let types: Vec<_> = sets.iter().map(|s| partition_type(s).unwrap()).collect();
    for i in 0..sets.len() {
        for j in i..sets.len() {
            assert_eq!(side_preserving_isomorphic(&bip[i], &bip[j]), types[i] == types[j], "{} {}", sets[i], sets[j]);
            if graphs[i].vertex_count() == graphs[j].vertex_count() && graphs[i].edge_count() == graphs[j].edge_count() {
                assert_eq!(
                    graphs[i].is_isomorphic(&graphs[j]),
                    ferrers_isomorphic(&types[i], &types[j]),
                    "{} {}",
                    sets[i],
                    sets[j]
                );
            }
        }
    }
}

#[test]
fn composition_graph_matches_canonical_gamma() {
    for n in 1..=3usize {
        for code in 0..4u32.pow(n as u32) {
            let parts: Vec<u32> = (0..n).map(|i| code / 4u32.pow(i as u32) % 4).collect();
            if parts[0] == 0 {
                continue;
            }
            let nu = WeakComposition::new(parts.clone()).unwrap();
            let (lambda, g) = graph_from_composition(&nu).unwrap();
            assert!(g.is_ferrers(), "{parts:?}");
            assert_eq!(g.row_degree_partition(), lambda);
            let gamma = gamma_graph(&canonical_set(&nu).unwrap());
            assert!(g.to_simple().unwrap().is_isomorphic(&gamma.to_simple().unwrap()), "{parts:?}");
            assert_eq!(g.edges.len(), nu.hyperplane_count());
        }
    }
}

proptest! {
    #[test]
    fn relabeling_preserves_type(parts in prop::collection::vec(1u32..5, 1..5), gap in 0u32..3) {
        // Shifting every element by an even amount keeps parities and order.
        let lambda = IntegerPartition::new(parts).unwrap();
        let v = v_from_partition(&lambda).unwrap();
        let w = PositiveIntSet::new(v.elements().iter().map(|a| a + 2 * gap)).unwrap();
        prop_assert_eq!(partition_type(&w).unwrap(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }
}
