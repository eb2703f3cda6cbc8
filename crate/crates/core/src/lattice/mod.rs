//! Ground-truth oracles: bond lattices, brute-force intersection posets of
//! real arrangements over the rationals, Möbius functions, region counts,
//! deletion–contraction and the coordinate change between `H_ν` and the
//! graphic arrangement of `G_ν`.

mod arrangement;
mod bond;
mod chromatic;
mod coords;
pub mod linalg;
mod poset;

pub use arrangement::{build_arrangement_nu, intersection_poset, regions, AffineFlat, RationalHyperplane};
pub use bond::{bond_char_poly, bond_lattice, SetPartitionElement};
pub use chromatic::chromatic_deletion_contraction;
pub use coords::{coordinate_map_nu, CoordinateMapReport};
pub use poset::RankedPoset;
