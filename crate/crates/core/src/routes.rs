//! One entry point per independent route to the characteristic polynomial
//! of a Ferrers-type graph, keyed by a vertex set `V` or a composition `ν`.

use alloc::format;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::dperm::char_poly_via_dperms;
use crate::error::{domain, Error, Result};
use crate::exactpoly::UniPoly;
use crate::ferrers::{
    canonical_set, composition_from_partition, gamma_graph, graph_from_composition, partition_type, PositiveIntSet,
    WeakComposition,
};
use crate::genfun::{dowling_char_formula, gf_complete_bipartite, gf_k_staircase};
use crate::lattice::{bond_char_poly, build_arrangement_nu, intersection_poset};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    /// Signed count of D-permutations by cycle number.
    DPerm,
    /// Möbius function of the bond lattice.
    Bond,
    /// Intersection poset of the rational arrangement `H_ν`.
    Arrangement,
    /// Coefficient of a closed-form generating function.
    GenFun,
    /// Λ evaluated at the Dowling specialization with `q = 1`.
    Dowling,
}

impl Route {
    pub const ALL: [Route; 5] = [Route::DPerm, Route::Bond, Route::Arrangement, Route::GenFun, Route::Dowling];

    pub fn name(self) -> &'static str {
        match self {
            Route::DPerm => "dperm",
            Route::Bond => "bond",
            Route::Arrangement => "arrangement",
            Route::GenFun => "genfun",
            Route::Dowling => "dowling",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| domain(format!("unknown method {s:?}")))
    }
}

/// Which series supplies the generating-function route for a composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFunSource {
    /// `ν = (k, ..., k)` with `n` entries.
    KStaircase { n: usize, k: u32 },
    /// `ν = (k, 0, ..., 0)` with `n` entries; the series gives `t·χ`.
    CompleteBipartite { n: usize, k: u32 },
    /// Neither family: the Λ formula at `q = 1`.
    Lambda,
}

pub fn genfun_source(nu: &WeakComposition) -> GenFunSource {
    let p = nu.parts();
    let (n, k) = (p.len(), p[0]);
    if k > 0 && p.iter().all(|&x| x == k) {
        GenFunSource::KStaircase { n, k }
    } else if k > 0 && p[1..].iter().all(|&x| x == 0) {
        GenFunSource::CompleteBipartite { n, k }
    } else {
        GenFunSource::Lambda
    }
}

/// `χ` of `G_ν` along `route`.
pub fn chi_for_composition(nu: &WeakComposition, route: Route, limits: &Limits) -> Result<UniPoly> {
    match route {
        Route::DPerm => char_poly_via_dperms(&canonical_set(nu)?, limits),
        Route::Bond => {
            let (_, g) = graph_from_composition(nu)?;
            bond_char_poly(&g.to_simple()?, limits)
        }
        Route::Arrangement => Ok(intersection_poset(&build_arrangement_nu(nu, limits)?, limits)?.char_poly()),
        Route::GenFun => match genfun_source(nu) {
            GenFunSource::KStaircase { n, k } => Ok(gf_k_staircase(k, n)?.coeff(n).clone()),
            GenFunSource::CompleteBipartite { n, k } => {
                let ch = gf_complete_bipartite(k, n)?.coeff(n).clone();
                divide_by_t(&ch)
            }
            GenFunSource::Lambda => dowling_char_formula(nu, 1),
        },
        Route::Dowling => dowling_char_formula(nu, 1),
    }
}

/// `χ` of `Γ_V` along `route`. The arrangement and generating-function
/// routes go through `ν(λ(V))` and need `V` to have an odd minimum and an
/// even maximum.
pub fn chi_for_set(v: &PositiveIntSet, route: Route, limits: &Limits) -> Result<UniPoly> {
    match route {
        Route::DPerm => char_poly_via_dperms(v, limits),
        Route::Bond => bond_char_poly(&gamma_graph(v).to_simple()?, limits),
        _ => chi_for_composition(&composition_of_set(v)?, route, limits),
    }
}

/// `ν(λ(V))` for a set with odd minimum and even maximum.
pub fn composition_of_set(v: &PositiveIntSet) -> Result<WeakComposition> {
    let odd_min = v.elements().first().is_some_and(|a| a % 2 == 1);
    if !odd_min || !v.has_even_max() {
        return Err(domain(format!("{v} needs an odd minimum and an even maximum")));
    }
    composition_from_partition(&partition_type(v)?)
}

fn divide_by_t(p: &UniPoly) -> Result<UniPoly> {
    let t = UniPoly::var();
    let (quot, rem) = p.div_rem(&t).ok_or_else(|| Error::Invariant("division by t failed".into()))?;
    if rem != UniPoly::constant(BigInt::from(0)) {
        return Err(Error::Invariant(format!("{p} is not divisible by t")));
    }
    Ok(quot)
}
