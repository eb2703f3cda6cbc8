use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{check_size, domain, Result};
use crate::exactpoly::UniPoly;
use crate::graph::SimpleGraph;
use crate::limits::Limits;

use super::RankedPoset;

/// A set partition of the vertices, blocks as vertex masks ordered by
/// their least vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartitionElement {
    pub blocks: Vec<u64>,
}

/// All partitions of `within` into blocks inducing connected subgraphs.
fn connected_partitions(g: &SimpleGraph, within: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partition(g, within, &mut current, &mut out);
    out
}

fn extend_partition(g: &SimpleGraph, left: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if left == 0 {
        out.push(current.clone());
        return;
    }
    let low = left & left.wrapping_neg();
    let rest = left & !low;
    // Blocks containing the least remaining vertex: `low` plus a subset of
    // the vertices reachable from it.
    let reachable = g.reach(low.trailing_zeros() as usize, left) & !low;
    let mut sub = reachable;
    loop {
        let block = low | sub;
        if g.is_connected_subset(block) {
            current.push(block);
            extend_partition(g, rest & !sub, current, out);
            current.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & reachable;
    }
}

/// The bond lattice `Π_G`: partitions with connected blocks, ordered by
/// refinement and ranked by `|V| − #blocks`.
pub fn bond_lattice(g: &SimpleGraph, limits: &Limits) -> Result<RankedPoset<SetPartitionElement>> {
    check_size("bond lattice vertex set", g.vertex_count(), limits.bond_max_vertices)?;
    if g.vertex_count() == 0 {
        return Err(domain("the graph has no vertices"));
    }
    let n = g.vertex_count() as u32;
    let mut parts = connected_partitions(g, g.all_mask());
    for p in &mut parts {
        p.sort_unstable_by_key(|b| b.trailing_zeros());
    }
    // Finer partitions (more blocks) first.
    parts.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let index: BTreeMap<&[u64], u32> = parts.iter().enumerate().map(|(i, p)| (p.as_slice(), i as u32)).collect();

    let mut memo: BTreeMap<u64, Vec<Vec<u64>>> = BTreeMap::new();
    let mut below = Vec::with_capacity(parts.len());
    for p in &parts {
        for &b in p {
            memo.entry(b).or_insert_with(|| connected_partitions(g, b));
        }
        let mut down = Vec::new();
        let mut combo: Vec<u64> = Vec::new();
        refinements(p, 0, &memo, &mut combo, &mut |blocks| {
            let mut key = blocks.to_vec();
            key.sort_unstable_by_key(|b| b.trailing_zeros());
            if key != *p {
                down.push(index[key.as_slice()]);
            }
        });
        below.push(down);
    }
    let ranks = parts.iter().map(|p| n - p.len() as u32).collect();
    let elements = parts.into_iter().map(|blocks| SetPartitionElement { blocks }).collect();
    RankedPoset::new(elements, ranks, below)
}

fn refinements(
    p: &[u64],
    i: usize,
    memo: &BTreeMap<u64, Vec<Vec<u64>>>,
    combo: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]),
) {
    if i == p.len() {
        f(combo);
        return;
    }
    for split in &memo[&p[i]] {
        let mark = combo.len();
        combo.extend_from_slice(split);
        refinements(p, i + 1, memo, combo, f);
        combo.truncate(mark);
    }
}

/// `t^{c(G)−1} χ_{Π_G}(t)`: the bond lattice characteristic polynomial,
/// padded so that `t` times it is the chromatic polynomial even when `G`
/// is disconnected.
pub fn bond_char_poly(g: &SimpleGraph, limits: &Limits) -> Result<UniPoly> {
    let p = bond_lattice(g, limits)?;
    let c = g.component_count() as u32;
    Ok(p.char_poly().shift_degree(c - 1))
}
