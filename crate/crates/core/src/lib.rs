//! Exact characteristic polynomials of homogenized ν-arrangements and
//! Ferrers graphs, computed along several independent routes:
//!
//! * enumeration of D-permutations ([`dperm`]),
//! * Möbius functions of bond lattices and of brute-force intersection
//!   posets over the rationals ([`lattice`]),
//! * closed-form generating functions ([`genfun`]),
//! * generalized surjective staircases and their six-variable weight
//!   enumerators Λ_S ([`staircase`]).
//!
//! Everything is exact: integer and rational coefficients are
//! arbitrary precision, and no floating point is used anywhere.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dperm;
pub mod error;
pub mod exactpoly;
pub mod ferrers;
pub mod genfun;
pub mod graph;
pub mod lattice;
pub mod limits;
pub mod routes;
pub mod staircase;

pub use error::{Error, Result};
pub use exactpoly::{Poly, RatPoly, Ring, SixVarPoly, TruncatedSeries, UniPoly, Var};
pub use ferrers::{BipartiteGraph, IntegerPartition, PositiveIntSet, VertexLabel, WeakComposition};
pub use limits::Limits;
