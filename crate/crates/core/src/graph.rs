//! Small simple graphs on at most 64 vertices, stored as adjacency bitmasks.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{check_size, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(vertices: usize) -> Result<Self> {
        check_size("graph", vertices, MAX_VERTICES)?;
        Ok(SimpleGraph {
            adj: vec![0; vertices],
        })
    }

    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(vertices)?;
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Adds the edge `{a, b}`. Loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a] |= 1 << b;
            self.adj[b] |= 1 << a;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.adj.len() {
            for b in a + 1..self.adj.len() {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Vertices reachable from `start` inside `within` (a vertex mask).
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & within & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Whether the subgraph induced on the nonempty mask is connected.
    pub fn is_connected_subset(&self, mask: u64) -> bool {
        mask != 0 && self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let all = self.all_mask();
        let mut left = all;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, all);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn all_mask(&self) -> u64 {
        match self.adj.len() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    /// Graph isomorphism by backtracking, pruned by degrees and adjacency
    /// to already matched vertices. Meant for graphs of a dozen vertices.
    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da: Vec<u32> = (0..n).map(|v| self.degree(v)).collect();
        let mut db: Vec<u32> = (0..n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        // Match high-degree vertices first; they constrain the most.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| core::cmp::Reverse(self.degree(v)));
        let mut image = vec![usize::MAX; n];
        let mut used = 0u64;
        self.extend_match(other, &order, 0, &mut image, &mut used)
    }

    fn extend_match(
        &self,
        other: &SimpleGraph,
        order: &[usize],
        depth: usize,
        image: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..other.vertex_count() {
            if *used >> w & 1 == 1 || other.degree(w) != self.degree(v) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&p| self.has_edge(v, p) == other.has_edge(w, image[p]));
            if !consistent {
                continue;
            }
            image[v] = w;
            *used |= 1 << w;
            if self.extend_match(other, order, depth + 1, image, used) {
                return true;
            }
            *used &= !(1 << w);
            image[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn components_and_connectivity() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b00100, 0b11000]);
        assert!(g.is_connected_subset(0b11000));
        assert!(!g.is_connected_subset(0b01001));
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn isomorphism_of_relabeled_paths() {
        let p = path(5);
        let q = SimpleGraph::from_edges(5, &[(4, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(p.is_isomorphic(&q));
        let star = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!p.is_isomorphic(&star));
    }

    #[test]
    fn same_degrees_different_graphs() {
        // Two triangles versus a hexagon: both 2-regular on six vertices.
        let triangles =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let hexagon =
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(!triangles.is_isomorphic(&hexagon));
        assert!(hexagon.is_isomorphic(&hexagon.clone()));
    }

    #[test]
    fn rejects_oversized_graph() {
        assert!(SimpleGraph::new(65).is_err());
        assert_eq!(SimpleGraph::new(64).unwrap().all_mask(), u64::MAX);
    }
}
