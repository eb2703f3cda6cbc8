//! Finite sets of positive integers, partitions, compositions and the
//! Ferrers graphs they describe.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};
use crate::graph::SimpleGraph;

/// A finite set of positive integers, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PositiveIntSet {
    elems: Vec<u32>,
}

impl PositiveIntSet {
    /// Builds a set, sorting and removing repeats. Zero is rejected.
    pub fn new(elems: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut elems: Vec<u32> = elems.into_iter().collect();
        if elems.contains(&0) {
            return Err(domain("sets contain positive integers only"));
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(PositiveIntSet { elems })
    }

    /// `{1, 2, ..., n}`.
    pub fn range(n: u32) -> Self {
        PositiveIntSet {
            elems: (1..=n).collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.elems.last().copied()
    }

    pub fn contains(&self, a: u32) -> bool {
        self.elems.binary_search(&a).is_ok()
    }

    /// Position of `a` in ascending order.
    pub fn index_of(&self, a: u32) -> Option<usize> {
        self.elems.binary_search(&a).ok()
    }

    pub fn odd_part(&self) -> Vec<u32> {
        self.elems.iter().copied().filter(|a| a % 2 == 1).collect()
    }

    pub fn even_part(&self) -> Vec<u32> {
        self.elems.iter().copied().filter(|a| a % 2 == 0).collect()
    }

    /// Whether the largest element exists and is even.
    pub fn has_even_max(&self) -> bool {
        matches!(self.largest(), Some(m) if m % 2 == 0)
    }

    /// Drops the largest even element and every odd element above the
    /// second-largest even element (all odd elements when there is only one
    /// even element).
    pub fn prime(&self) -> PositiveIntSet {
        let evens = self.even_part();
        let Some(&top) = evens.last() else {
            return self.clone();
        };
        let floor = if evens.len() >= 2 { evens[evens.len() - 2] } else { 0 };
        let elems = self
            .elems
            .iter()
            .copied()
            .filter(|&a| a != top && !(a % 2 == 1 && a > floor))
            .collect();
        PositiveIntSet { elems }
    }

    pub fn union(&self, other: &PositiveIntSet) -> PositiveIntSet {
        let mut elems = self.elems.clone();
        elems.extend_from_slice(&other.elems);
        elems.sort_unstable();
        elems.dedup();
        PositiveIntSet { elems }
    }

    pub fn difference(&self, other: &PositiveIntSet) -> PositiveIntSet {
        PositiveIntSet {
            elems: self
                .elems
                .iter()
                .copied()
                .filter(|&a| !other.contains(a))
                .collect(),
        }
    }
}

impl fmt::Display for PositiveIntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Integer partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    /// Sorts the parts into decreasing order. Zero parts are rejected.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(domain("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> IntegerPartition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        IntegerPartition { parts }
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Ordered tuple `(ν_1, ..., ν_n)` of nonnegative integers, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let parts: Vec<u32> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(domain("a composition needs at least one entry"));
        }
        Ok(WeakComposition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of entries.
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Sum of entries.
    pub fn m(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `(k, ..., k)` with `n` entries.
    pub fn constant(n: usize, k: u32) -> Result<Self> {
        Self::new(core::iter::repeat_n(k, n))
    }

    /// `(k, 0, ..., 0)` with `n` entries.
    pub fn leading(n: usize, k: u32) -> Result<Self> {
        Self::new((0..n).map(|i| if i == 0 { k } else { 0 }))
    }

    /// Hyperplane count `Σ ν_i (n + 1 − i)` of the associated arrangement.
    pub fn hyperplane_count(&self) -> usize {
        let n = self.n();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &v)| v as usize * (n - i))
            .sum()
    }

    /// `λ(ν) = (ν_1 + ... + ν_n, ..., ν_1 + ν_2, ν_1)`.
    pub fn partition(&self) -> Result<IntegerPartition> {
        if self.parts[0] == 0 {
            return Err(domain("the first entry of the composition must be positive"));
        }
        let mut sums = Vec::with_capacity(self.n());
        let mut acc = 0;
        for &v in &self.parts {
            acc += v;
            sums.push(acc);
        }
        IntegerPartition::new(sums)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Vertex label: an integer with an optional copy index, as in `3^(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    pub value: u32,
    pub copy: Option<u32>,
}

impl VertexLabel {
    pub fn plain(value: u32) -> Self {
        VertexLabel { value, copy: None }
    }

    pub fn copy(value: u32, copy: u32) -> Self {
        VertexLabel {
            value,
            copy: Some(copy),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.copy {
            Some(c) => write!(f, "{}^({})", self.value, c),
            None => write!(f, "{}", self.value),
        }
    }
}

/// Bipartite graph with column (odd) and row (even) sides.
///
/// Edges are `(column index, row index)` pairs, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub columns: Vec<VertexLabel>,
    pub rows: Vec<VertexLabel>,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.columns.len() + self.rows.len()
    }

    pub fn edge_labels(&self) -> Vec<(VertexLabel, VertexLabel)> {
        self.edges
            .iter()
            .map(|&(c, r)| (self.columns[c], self.rows[r]))
            .collect()
    }

    /// Columns take vertices `0..C`, rows follow.
    pub fn to_simple(&self) -> Result<SimpleGraph> {
        let offset = self.columns.len();
        let edges: Vec<_> = self.edges.iter().map(|&(c, r)| (c, offset + r)).collect();
        SimpleGraph::from_edges(self.vertex_count(), &edges)
    }

    /// Row degrees in decreasing order, with zeros dropped. For a Ferrers
    /// graph this is its associated partition.
    pub fn row_degree_partition(&self) -> IntegerPartition {
        let mut deg = alloc::vec![0u32; self.rows.len()];
        for &(_, r) in &self.edges {
            deg[r] += 1;
        }
        IntegerPartition::new(deg.into_iter().filter(|&d| d > 0)).expect("positive degrees")
    }

    /// Whether the neighborhoods are nested like the cells of a Ferrers
    /// diagram and the two corner edges exist.
    pub fn is_ferrers(&self) -> bool {
        if self.columns.is_empty() || self.rows.is_empty() {
            return false;
        }
        let mut nbr: Vec<u64> = alloc::vec![0; self.rows.len()];
        for &(c, r) in &self.edges {
            nbr[r] |= 1 << c;
        }
        let mut sorted = nbr.clone();
        sorted.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
        let nested = sorted.windows(2).all(|w| w[1] & !w[0] == 0);
        let first = sorted[0];
        let covers_all_columns = first.count_ones() as usize == self.columns.len();
        let last_nonempty = sorted.iter().all(|&m| m != 0);
        nested && covers_all_columns && last_nonempty
    }
}

/// `λ(V)`: for each even element, the number of smaller odd elements,
/// in decreasing order with zero counts dropped.
pub fn partition_type(v: &PositiveIntSet) -> Result<IntegerPartition> {
    let evens = v.even_part();
    if evens.is_empty() {
        return Err(domain(format!("{v} has no even element")));
    }
    let odds = v.odd_part();
    let counts = evens
        .iter()
        .map(|&e| odds.iter().filter(|&&o| o < e).count() as u32)
        .filter(|&c| c > 0);
    IntegerPartition::new(counts)
}

/// The set read off the boundary walk of the Ferrers diagram of `λ`,
/// labeling east steps by the next odd integer and north steps by the next
/// even integer.
pub fn v_from_partition(lambda: &IntegerPartition) -> Result<PositiveIntSet> {
    if lambda.is_empty() {
        return Err(domain("the partition must be nonempty"));
    }
    let mut elems = Vec::new();
    let mut last = 0u32;
    let mut prev = 0u32;
    for &p in lambda.parts().iter().rev() {
        for _ in prev..p {
            last = if last.is_multiple_of(2) { last + 1 } else { last + 2 };
            elems.push(last);
        }
        last = if last.is_multiple_of(2) { last + 2 } else { last + 1 };
        elems.push(last);
        prev = p;
    }
    PositiveIntSet::new(elems)
}

/// The canonical set `v_from_partition(λ(ν))` for a composition.
pub fn canonical_set(nu: &WeakComposition) -> Result<PositiveIntSet> {
    v_from_partition(&nu.partition()?)
}

/// `ν_i = λ_i − λ_{i−1}` with the parts read in increasing order.
pub fn composition_from_partition(lambda: &IntegerPartition) -> Result<WeakComposition> {
    let mut prev = 0;
    let parts: Vec<u32> = lambda
        .parts()
        .iter()
        .rev()
        .map(|&p| {
            let d = p - prev;
            prev = p;
            d
        })
        .collect();
    WeakComposition::new(parts)
}

/// `Γ_V`: odd elements as columns, even elements as rows, and an edge
/// `{a, b}` whenever odd `a` is below even `b`.
pub fn gamma_graph(v: &PositiveIntSet) -> BipartiteGraph {
    let odds = v.odd_part();
    let evens = v.even_part();
    let mut edges = Vec::new();
    for (c, &o) in odds.iter().enumerate() {
        for (r, &e) in evens.iter().enumerate() {
            if o < e {
                edges.push((c, r));
            }
        }
    }
    edges.sort_unstable();
    BipartiteGraph {
        columns: odds.into_iter().map(VertexLabel::plain).collect(),
        rows: evens.into_iter().map(VertexLabel::plain).collect(),
        edges,
    }
}

/// `λ(ν)` and `G_ν`: columns `(2i−1)^(ℓ)` for `ℓ ≤ ν_i`, rows `2, ..., 2n`,
/// and an edge `{(2i−1)^(ℓ), 2j}` whenever `i ≤ j`.
pub fn graph_from_composition(nu: &WeakComposition) -> Result<(IntegerPartition, BipartiteGraph)> {
    let lambda = nu.partition()?;
    let mut columns = Vec::new();
    let mut col_block = Vec::new();
    for (i, &v) in nu.parts().iter().enumerate() {
        for l in 1..=v {
            columns.push(VertexLabel::copy(2 * i as u32 + 1, l));
            col_block.push(i);
        }
    }
    let rows: Vec<_> = (1..=nu.n() as u32).map(|j| VertexLabel::plain(2 * j)).collect();
    let mut edges = Vec::new();
    for (c, &i) in col_block.iter().enumerate() {
        for r in i..nu.n() {
            edges.push((c, r));
        }
    }
    Ok((
        lambda,
        BipartiteGraph {
            columns,
            rows,
            edges,
        },
    ))
}

/// Ferrers graphs of `λ` and `μ` are isomorphic exactly when the
/// partitions are equal or conjugate.
pub fn ferrers_isomorphic(lambda: &IntegerPartition, mu: &IntegerPartition) -> bool {
    lambda == mu || *lambda == mu.conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(v: &[u32]) -> PositiveIntSet {
        PositiveIntSet::new(v.iter().copied()).unwrap()
    }

    fn part(v: &[u32]) -> IntegerPartition {
        IntegerPartition::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn partition_type_examples() {
        assert_eq!(partition_type(&set(&[1, 3, 7, 9, 2, 4, 6, 10])).unwrap(), part(&[4, 2, 2, 1]));
        assert_eq!(partition_type(&PositiveIntSet::range(6)).unwrap(), part(&[3, 2, 1]));
        assert_eq!(partition_type(&set(&[1, 2])).unwrap(), part(&[1]));
        assert_eq!(partition_type(&set(&[2, 4])).unwrap(), part(&[]));
        assert!(partition_type(&set(&[1, 3])).is_err());
    }

    #[test]
    fn walk_examples() {
        assert_eq!(v_from_partition(&part(&[1])).unwrap(), set(&[1, 2]));
        assert_eq!(v_from_partition(&part(&[3, 2, 1])).unwrap(), PositiveIntSet::range(6));
        assert_eq!(
            v_from_partition(&part(&[4, 2, 2, 1])).unwrap(),
            set(&[1, 2, 3, 4, 6, 7, 9, 10])
        );
        assert!(v_from_partition(&part(&[])).is_err());
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_graph(&PositiveIntSet::range(6));
        let labels: Vec<(u32, u32)> = g.edge_labels().iter().map(|(a, b)| (a.value, b.value)).collect();
        assert_eq!(labels, vec![(1, 2), (1, 4), (1, 6), (3, 4), (3, 6), (5, 6)]);
        assert!(g.is_ferrers());
        assert_eq!(gamma_graph(&set(&[1, 2])).edges.len(), 1);
        assert!(gamma_graph(&set(&[2, 4])).edges.is_empty());
    }

    #[test]
    fn composition_examples() {
        let nu = WeakComposition::new([3, 3, 3]).unwrap();
        assert_eq!(nu.partition().unwrap(), part(&[9, 6, 3]));
        let (lambda, g) = graph_from_composition(&WeakComposition::new([1, 1]).unwrap()).unwrap();
        assert_eq!(lambda, part(&[2, 1]));
        assert_eq!(g.edges.len(), 3);
        let (lambda, star) = graph_from_composition(&WeakComposition::new([4]).unwrap()).unwrap();
        assert_eq!(lambda, part(&[4]));
        assert_eq!(star.rows.len(), 1);
        assert_eq!(star.edges.len(), 4);
        assert_eq!(star.columns[3], VertexLabel::copy(1, 4));
        assert!(graph_from_composition(&WeakComposition::new([0, 1]).unwrap()).is_err());
        assert!(WeakComposition::new([]).is_err());
    }

    #[test]
    fn composition_partition_roundtrip() {
        let nu = WeakComposition::new([2, 0, 1]).unwrap();
        let lambda = nu.partition().unwrap();
        assert_eq!(lambda, part(&[3, 2, 2]));
        assert_eq!(composition_from_partition(&lambda).unwrap(), nu);
    }

    #[test]
    fn conjugates() {
        assert_eq!(part(&[4, 2, 2, 1]).conjugate(), part(&[4, 3, 1, 1]));
        assert!(ferrers_isomorphic(&part(&[3, 2, 1]), &part(&[3, 2, 1])));
        assert!(ferrers_isomorphic(&part(&[2, 1]), &part(&[2, 1]).conjugate()));
        assert!(ferrers_isomorphic(&part(&[4, 2, 2, 1]), &part(&[4, 3, 1, 1])));
        assert!(!ferrers_isomorphic(&part(&[3]), &part(&[2, 1])));
    }

    #[test]
    fn prime_drops_top_row() {
        let s = set(&[1, 2, 4, 5, 7, 8]);
        assert_eq!(s.prime(), set(&[1, 2, 4]));
        assert_eq!(s.prime().prime(), set(&[1, 2]));
        assert_eq!(set(&[1, 3, 4]).prime(), set(&[]));
    }
}
