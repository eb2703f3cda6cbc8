//! D-permutations, their q-labeled variants and ID forests.
//!
//! A D-permutation of a finite set `V` of positive integers is a bijection
//! `σ` of `V` with `σ(i) ≥ i` for odd `i` and `σ(i) ≤ i` for even `i`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_size, domain, Result};
use crate::exactpoly::{Ring, UniPoly};
use crate::ferrers::{canonical_set, PositiveIntSet, WeakComposition};
use crate::limits::Limits;

/// Cap on explicitly materialized labeled objects.
const LABELED_LIST_MAX: usize = 1 << 20;

/// `Σ_c (−1)^{|V|−c} counts[c] t^{c−1}`, where `counts[c]` is the (weighted)
/// number of objects with `c` cycles or components.
///
/// Every characteristic polynomial in the crate is normalized through this
/// function, so they are all monic with the same sign convention.
pub fn char_poly_from_cycle_counts(vertices: usize, counts: &[BigInt]) -> Result<UniPoly> {
    if counts.first().is_some_and(|c| !c.is_zero()) {
        return Err(domain("objects with zero cycles only exist on the empty set"));
    }
    let terms = counts.iter().enumerate().skip(1).map(|(c, n)| {
        let signed = if (vertices + c).is_multiple_of(2) { n.clone() } else { -n.clone() };
        (c as u32 - 1, signed)
    });
    let mut p = UniPoly::zero();
    for (e, c) in terms {
        p = p + UniPoly::monomial(c, e);
    }
    Ok(p)
}

/// A D-permutation in canonical cycle form: each cycle starts at its
/// largest element and cycles are sorted by their largest element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DPermutation {
    pub cycles: Vec<Vec<u32>>,
}

impl DPermutation {
    /// Builds the cycle form from `images[i]`, the index of `σ(elems[i])`.
    pub fn from_images(elems: &[u32], images: &[usize]) -> Self {
        let mut seen = vec![false; elems.len()];
        let mut cycles = Vec::new();
        for start in (0..elems.len()).rev() {
            if seen[start] {
                continue;
            }
            // Scanning from the top, the first unseen index is a cycle maximum.
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(elems[i]);
                i = images[i];
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        DPermutation { cycles }
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn image(&self, a: u32) -> Option<u32> {
        for cyc in &self.cycles {
            if let Some(p) = cyc.iter().position(|&b| b == a) {
                return Some(cyc[(p + 1) % cyc.len()]);
            }
        }
        None
    }

    /// Number of cycles `(2i)` of length one on an even element.
    pub fn even_fixed_points(&self) -> usize {
        self.cycles
            .iter()
            .filter(|c| c.len() == 1 && c[0] % 2 == 0)
            .count()
    }
}

fn cycle_count_of(images: &[usize]) -> usize {
    let mut seen = 0u64;
    let mut count = 0;
    for start in 0..images.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        count += 1;
        let mut i = start;
        while seen >> i & 1 == 0 {
            seen |= 1 << i;
            i = images[i];
        }
    }
    count
}

/// Calls `visit` with the image table of every D-permutation of `v`.
///
/// `images[i]` is the index in `v` of `σ(v[i])`.
pub fn for_each_dperm(v: &PositiveIntSet, limits: &Limits, mut visit: impl FnMut(&[usize])) -> Result<()> {
    check_size("D-permutation set", v.len(), limits.dperm_max.min(63))?;
    let elems = v.elements();
    let mut images = vec![usize::MAX; elems.len()];
    extend_dperm(elems, 0, 0, &mut images, &mut visit);
    Ok(())
}

fn extend_dperm(elems: &[u32], pos: usize, used: u64, images: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if pos == elems.len() {
        visit(images);
        return;
    }
    let range = if elems[pos] % 2 == 1 { pos..elems.len() } else { 0..pos + 1 };
    for j in range {
        if used >> j & 1 == 1 {
            continue;
        }
        images[pos] = j;
        extend_dperm(elems, pos + 1, used | 1 << j, images, visit);
    }
}

/// All D-permutations of `v`, sorted by cycle form.
pub fn enumerate_dperms(v: &PositiveIntSet, limits: &Limits) -> Result<Vec<DPermutation>> {
    let mut out = Vec::new();
    for_each_dperm(v, limits, |im| out.push(DPermutation::from_images(v.elements(), im)))?;
    out.sort();
    Ok(out)
}

/// `counts[c]` = number of D-permutations of `v` with `c` cycles.
pub fn cycle_count_distribution(v: &PositiveIntSet, limits: &Limits) -> Result<Vec<BigInt>> {
    let mut counts = vec![0u64; v.len() + 1];
    for_each_dperm(v, limits, |im| counts[cycle_count_of(im)] += 1)?;
    Ok(counts.into_iter().map(BigInt::from).collect())
}

/// Characteristic polynomial of the bond lattice of `Γ_V` (times
/// `t^{c−1}` when `Γ_V` has `c` components), counted by D-permutations.
pub fn char_poly_via_dperms(v: &PositiveIntSet, limits: &Limits) -> Result<UniPoly> {
    if v.is_empty() {
        return Err(domain("the set must be nonempty"));
    }
    char_poly_from_cycle_counts(v.len(), &cycle_count_distribution(v, limits)?)
}

/// Chromatic polynomial of `Γ_V`, `Σ_σ (−1)^{|V|−c(σ)} t^{c(σ)}`.
pub fn chromatic_via_dperms(v: &PositiveIntSet, limits: &Limits) -> Result<UniPoly> {
    if v.is_empty() {
        return Ok(UniPoly::one());
    }
    Ok(char_poly_via_dperms(v, limits)?.shift_degree(1))
}

/// `Σ_σ t^{c(σ)}` over the D-permutations of `v`.
pub fn cycle_generating_poly(v: &PositiveIntSet, limits: &Limits) -> Result<UniPoly> {
    let counts = cycle_count_distribution(v, limits)?;
    Ok(UniPoly::from_coeffs(counts))
}

/// Joint distribution of (even fixed points, all other cycles).
pub fn dperm_cycle_statistics(v: &PositiveIntSet, limits: &Limits) -> Result<BTreeMap<(usize, usize), u64>> {
    let elems = v.elements();
    let mut table = BTreeMap::new();
    for_each_dperm(v, limits, |im| {
        let efp = (0..im.len()).filter(|&i| im[i] == i && elems[i].is_multiple_of(2)).count();
        let other = cycle_count_of(im) - efp;
        *table.entry((efp, other)).or_insert(0) += 1;
    })?;
    Ok(table)
}

/// The ambient half-bound `r` used for a set: `⌈max V / 2⌉`.
pub fn default_r(v: &PositiveIntSet) -> u32 {
    v.largest().map_or(0, |m| m.div_ceil(2))
}

fn check_ambient(v: &PositiveIntSet, r: u32, q: u32) -> Result<()> {
    if q == 0 {
        return Err(domain("q must be at least 1"));
    }
    if v.largest().is_some_and(|m| m > 2 * r) {
        return Err(domain(alloc::format!("{v} is not contained in [{}]", 2 * r)));
    }
    Ok(())
}

/// Which entries of a canonical cycle carry a free label in `{0, ..., q−1}`.
///
/// The first entry (the maximum) is labeled 0. In the cycle through `2r`,
/// written `(2r, w_1, ..., w_s)`, the right-to-left minima of `w` stay
/// unlabeled; in any other cycle every remaining entry is free. For the
/// cycle `(8, 5, 7, 2, 3)` with `2r = 8` the word is `5 7 2 3`, its
/// right-to-left minima are `2` and `3`, and `5, 7` get free labels.
pub fn free_label_positions(cycle: &[u32], two_r: u32) -> Vec<bool> {
    let mut free = vec![true; cycle.len()];
    free[0] = false;
    if cycle[0] == two_r {
        let mut min = u32::MAX;
        for i in (1..cycle.len()).rev() {
            if cycle[i] < min {
                min = cycle[i];
                free[i] = false;
            }
        }
    }
    free
}

/// A D-permutation with labels aligned to its cycles: `Some(label)` for
/// labeled entries, `None` for unlabeled right-to-left minima.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QLabeledDPermutation {
    pub perm: DPermutation,
    pub r: u32,
    pub labels: Vec<Vec<Option<u32>>>,
}

fn free_label_count(perm: &DPermutation, two_r: u32) -> usize {
    perm.cycles
        .iter()
        .map(|c| free_label_positions(c, two_r).iter().filter(|&&f| f).count())
        .sum()
}

/// Weighted cycle counts: `counts[c] = Σ q^{free labels}` over
/// D-permutations of `v` with `c` cycles.
pub fn qlabeled_counts_by_cycles(v: &PositiveIntSet, r: u32, q: u32, limits: &Limits) -> Result<Vec<BigInt>> {
    check_ambient(v, r, q)?;
    let mut by_cycles: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); v.len() + 1];
    for_each_dperm(v, limits, |im| {
        let perm = DPermutation::from_images(v.elements(), im);
        let free = free_label_count(&perm, 2 * r);
        *by_cycles[perm.cycle_count()].entry(free).or_insert(0) += 1;
    })?;
    let q = BigInt::from(q);
    Ok(by_cycles
        .into_iter()
        .map(|m| m.into_iter().map(|(f, n)| BigInt::from(n) * Ring::pow(&q, f as u32)).sum())
        .collect())
}

/// Every D-permutation of `v ⊆ [2r]` with every admissible labeling.
pub fn enumerate_qlabeled_dperms(
    v: &PositiveIntSet,
    r: u32,
    q: u32,
    limits: &Limits,
) -> Result<Vec<QLabeledDPermutation>> {
    check_ambient(v, r, q)?;
    let total: BigInt = qlabeled_counts_by_cycles(v, r, q, limits)?.into_iter().sum();
    check_size("labeled D-permutation list", bigint_to_usize(&total), LABELED_LIST_MAX)?;
    let mut out = Vec::new();
    for perm in enumerate_dperms(v, limits)? {
        let free: Vec<Vec<bool>> = perm.cycles.iter().map(|c| free_label_positions(c, 2 * r)).collect();
        let slots = free.iter().flatten().filter(|&&f| f).count();
        for_each_labeling(slots, q, |choice| {
            let mut it = choice.iter();
            let labels = free
                .iter()
                .map(|fc| {
                    fc.iter()
                        .enumerate()
                        .map(|(i, &f)| {
                            if f {
                                it.next().copied()
                            } else if i == 0 {
                                Some(0)
                            } else {
                                None
                            }
                        })
                        .collect()
                })
                .collect();
            out.push(QLabeledDPermutation {
                perm: perm.clone(),
                r,
                labels,
            });
        });
    }
    Ok(out)
}

fn for_each_labeling(slots: usize, q: u32, mut f: impl FnMut(&[u32])) {
    let mut choice = vec![0u32; slots];
    loop {
        f(&choice);
        let mut i = 0;
        loop {
            if i == slots {
                return;
            }
            choice[i] += 1;
            if choice[i] < q {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn bigint_to_usize(n: &BigInt) -> usize {
    usize::try_from(n).unwrap_or(usize::MAX)
}

/// A forest on `V` whose edges join an odd vertex to a larger even vertex,
/// with an optional label per edge (present exactly on edges that avoid `2r`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdForest {
    pub edges: Vec<(u32, u32)>,
    pub labels: Vec<Option<u32>>,
}

impl IdForest {
    pub fn component_count(&self, vertices: usize) -> usize {
        vertices - self.edges.len()
    }
}

fn gamma_edges(v: &PositiveIntSet) -> Vec<(usize, usize)> {
    let elems = v.elements();
    let mut edges = Vec::new();
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            if a % 2 == 1 && b % 2 == 0 && a < b {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Whether the edge subset is a forest all of whose components, rooted
/// at their largest vertex, satisfy the ID condition: odd internal
/// vertices are smaller than all their descendants and even internal
/// vertices are larger than all their descendants.
fn is_id_forest(elems: &[u32], edges: &[(usize, usize)]) -> bool {
    let n = elems.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut visited_edges = 0;
    // Indices are in increasing order, so scanning down meets each
    // component first at its largest vertex.
    for root in (0..n).rev() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        if !id_subtree(elems, &adj, root, usize::MAX, &mut seen, &mut visited_edges).0 {
            return false;
        }
    }
    visited_edges == edges.len()
}

/// Returns (ok, min, max) over the subtree rooted at `v`.
fn id_subtree(
    elems: &[u32],
    adj: &[Vec<usize>],
    v: usize,
    parent: usize,
    seen: &mut [bool],
    edges: &mut usize,
) -> (bool, u32, u32) {
    let (mut lo, mut hi) = (u32::MAX, 0);
    for &w in &adj[v] {
        if w == parent {
            continue;
        }
        if seen[w] {
            return (false, 0, 0);
        }
        seen[w] = true;
        *edges += 1;
        let (ok, a, b) = id_subtree(elems, adj, w, v, seen, edges);
        if !ok {
            return (false, 0, 0);
        }
        lo = lo.min(a);
        hi = hi.max(b);
    }
    let x = elems[v];
    if hi > 0 {
        let ok = if x % 2 == 1 { x < lo } else { x > hi };
        if !ok {
            return (false, 0, 0);
        }
    }
    (true, lo.min(x), hi.max(x))
}

fn for_each_id_forest(v: &PositiveIntSet, limits: &Limits, mut visit: impl FnMut(&[(usize, usize)])) -> Result<()> {
    check_size("vertex set of the ID forest enumeration", v.len(), limits.dperm_max)?;
    let all = gamma_edges(v);
    check_size("edge set of the ID forest enumeration", all.len(), limits.forest_max_edges.min(30))?;
    let mut chosen = Vec::new();
    for mask in 0u32..1 << all.len() {
        if mask.count_ones() as usize >= v.len().max(1) {
            continue;
        }
        chosen.clear();
        chosen.extend((0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]));
        if is_id_forest(v.elements(), &chosen) {
            visit(&chosen);
        }
    }
    Ok(())
}

/// Weighted component counts: `counts[c] = Σ q^{edges avoiding 2r}` over
/// ID forests on `v` with `c` components.
pub fn qlabeled_id_forest_counts(v: &PositiveIntSet, r: u32, q: u32, limits: &Limits) -> Result<Vec<BigInt>> {
    check_ambient(v, r, q)?;
    let elems = v.elements();
    let mut counts = vec![BigInt::zero(); v.len() + 1];
    let q = BigInt::from(q);
    for_each_id_forest(v, limits, |edges| {
        let free = edges.iter().filter(|&&(_, b)| elems[b] != 2 * r).count();
        counts[v.len() - edges.len()] += Ring::pow(&q, free as u32);
    })?;
    Ok(counts)
}

/// All q-labeled ID forests on `v ⊆ [2r]`.
pub fn enumerate_qlabeled_id_forests(v: &PositiveIntSet, r: u32, q: u32, limits: &Limits) -> Result<Vec<IdForest>> {
    let total: BigInt = qlabeled_id_forest_counts(v, r, q, limits)?.into_iter().sum();
    check_size("labeled ID forest list", bigint_to_usize(&total), LABELED_LIST_MAX)?;
    let elems = v.elements();
    let mut out = Vec::new();
    for_each_id_forest(v, limits, |edges| {
        let labeled: Vec<(u32, u32)> = edges.iter().map(|&(a, b)| (elems[a], elems[b])).collect();
        let free: Vec<bool> = labeled.iter().map(|&(_, b)| b != 2 * r).collect();
        let slots = free.iter().filter(|&&f| f).count();
        for_each_labeling(slots, q, |choice| {
            let mut it = choice.iter();
            let labels = free.iter().map(|&f| if f { it.next().copied() } else { None }).collect();
            out.push(IdForest {
                edges: labeled.clone(),
                labels,
            });
        });
    })?;
    out.sort();
    Ok(out)
}

/// Dowling characteristic polynomial of `ν` at order `q`, counted by
/// q-labeled D-permutations of the canonical set with `2r = max V`.
pub fn dowling_char_via_enumeration(nu: &WeakComposition, q: u32, limits: &Limits) -> Result<UniPoly> {
    let v = canonical_set(nu)?;
    let r = default_r(&v);
    let counts = qlabeled_counts_by_cycles(&v, r, q, limits)?;
    char_poly_from_cycle_counts(v.len(), &counts)
}
