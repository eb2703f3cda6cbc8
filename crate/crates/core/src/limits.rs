/// Enumeration bounds. Exceeding any of them is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest set size accepted by the D-permutation enumerators.
    pub dperm_max: usize,
    /// Largest set size accepted by the staircase enumerator.
    pub staircase_max: usize,
    /// Largest vertex count accepted by [`crate::lattice::bond_lattice`].
    pub bond_max_vertices: usize,
    /// Largest arrangement accepted by the brute-force intersection poset.
    pub hyperplane_max: usize,
    /// Largest edge count of Γ_V accepted by the ID forest enumerator.
    pub forest_max_edges: usize,
    /// Largest order of the symbolic Λ generating functions.
    pub lambda_series_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dperm_max: 12,
            staircase_max: 14,
            bond_max_vertices: 9,
            hyperplane_max: 14,
            forest_max_edges: 20,
            lambda_series_max_order: 4,
        }
    }
}
