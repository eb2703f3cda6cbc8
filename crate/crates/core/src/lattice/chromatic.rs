use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactpoly::UniPoly;

/// Chromatic polynomial by deletion–contraction.
///
/// Edges may repeat and may be loops; a loop makes the polynomial zero.
pub fn chromatic_deletion_contraction(vertices: usize, edges: &[(usize, usize)]) -> UniPoly {
    let mut es: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    es.sort_unstable();
    es.dedup();
    if es.iter().any(|&(a, b)| a == b) {
        return UniPoly::zero();
    }
    let Some(&(u, v)) = es.first() else {
        return UniPoly::monomial(One::one(), vertices as u32);
    };
    let deleted: Vec<_> = es[1..].to_vec();
    // Merge v into u, then close the gap left by v.
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let contracted: Vec<_> = es[1..].iter().map(|&(a, b)| (relabel(a), relabel(b))).collect();
    chromatic_deletion_contraction(vertices, &deleted) - chromatic_deletion_contraction(vertices - 1, &contracted)
}
