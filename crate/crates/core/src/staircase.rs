//! Generalized surjective staircases and their weight enumerators Λ_S.
//!
//! For a set `S` of positive integers with even maximum, a staircase is a
//! map `F: S → E(S)` onto the even elements with `F(a) ≥ a` for all `a`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dperm::cycle_generating_poly;
use crate::error::{check_size, domain, Result};
use crate::exactpoly::{Ring, SixVarPoly, UniPoly, Var};
use crate::ferrers::PositiveIntSet;
use crate::limits::Limits;

/// A set with even maximum, together with the derived sets `S′` and `S″`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StaircaseSet {
    set: PositiveIntSet,
}

impl StaircaseSet {
    pub fn new(set: PositiveIntSet) -> Result<Self> {
        if !set.has_even_max() {
            return Err(domain(format!("{set} must be nonempty with an even maximum")));
        }
        Ok(StaircaseSet { set })
    }

    pub fn from_elements(elems: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(PositiveIntSet::new(elems)?)
    }

    /// `S_n^k = {1, 3, ..., 2nk − 1} ∪ {2k, 4k, ..., 2nk}`.
    pub fn fixed_step(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(domain("n and k must be positive"));
        }
        let odds = (1..=n * k).map(|i| 2 * i - 1);
        let evens = (1..=n).map(|j| 2 * k * j);
        Self::from_elements(odds.chain(evens))
    }

    /// `T_n^k = {1, 3, ..., 2k − 1} ∪ {2k, 2k + 2, ..., 2(k + n − 1)}`.
    pub fn complete_bipartite(n: u32, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(domain("n and k must be positive"));
        }
        let odds = (1..=k).map(|i| 2 * i - 1);
        let evens = (0..n).map(|j| 2 * (k + j));
        Self::from_elements(odds.chain(evens))
    }

    pub fn set(&self) -> &PositiveIntSet {
        &self.set
    }

    pub fn elements(&self) -> &[u32] {
        self.set.elements()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn top(&self) -> u32 {
        self.set.largest().expect("nonempty")
    }

    /// `S′`, or `None` when it is empty (exactly one even element).
    pub fn prime(&self) -> Option<StaircaseSet> {
        let p = self.set.prime();
        (!p.is_empty()).then_some(StaircaseSet { set: p })
    }

    /// Number of odd elements of `S′ ∖ S″`; the exponent `ℓ` of the
    /// recurrence for Λ_S.
    pub fn ell_rec(&self) -> u32 {
        match self.prime() {
            None => 0,
            Some(p) => {
                let pp = p.set.prime();
                p.set.difference(&pp).odd_part().len() as u32
            }
        }
    }

    /// Number of odd elements above the second-largest even element, or of
    /// all odd elements when there is only one even element.
    pub fn ell_top(&self) -> u32 {
        let evens = self.set.even_part();
        let floor = if evens.len() >= 2 { evens[evens.len() - 2] } else { 0 };
        self.set.odd_part().iter().filter(|&&o| o > floor).count() as u32
    }
}

impl fmt::Display for StaircaseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.set.fmt(f)
    }
}

/// Values of a staircase, aligned with the ascending elements of its set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurjectiveStaircase {
    pub values: Vec<u32>,
}

/// The six statistics; they only count elements of `S′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct StaircaseStats {
    /// Odd elements sent to the maximum.
    pub mo: u32,
    /// Doubled fixed points.
    pub fd: u32,
    /// Isolated surfixed points.
    pub si: u32,
    /// Even elements sent to the maximum.
    pub me: u32,
    /// Isolated fixed points.
    pub fi: u32,
    /// Doubled surfixed points.
    pub sd: u32,
}

impl StaircaseStats {
    /// Exponents of `x, y, z, x̄, ȳ, z̄` in the weight.
    pub fn exponents(&self) -> [u32; 6] {
        [self.mo, self.fd, self.si, self.me, self.fi, self.sd]
    }

    pub fn weight(&self) -> SixVarPoly {
        SixVarPoly::monomial(BigInt::one(), self.exponents())
    }
}

/// Calls `visit` with the value array of every staircase on `s`.
pub fn for_each_staircase(s: &StaircaseSet, limits: &Limits, mut visit: impl FnMut(&[u32])) -> Result<()> {
    check_size("staircase set", s.len(), limits.staircase_max)?;
    let elems = s.elements();
    let evens = s.set.even_part();
    let mut hits = vec![0u32; evens.len()];
    let mut values = vec![0u32; elems.len()];
    extend_staircase(elems, &evens, elems.len(), evens.len(), &mut hits, &mut values, &mut visit);
    Ok(())
}

fn extend_staircase(
    elems: &[u32],
    evens: &[u32],
    remaining: usize,
    unhit: usize,
    hits: &mut [u32],
    values: &mut [u32],
    visit: &mut impl FnMut(&[u32]),
) {
    if unhit > remaining {
        return;
    }
    if remaining == 0 {
        visit(values);
        return;
    }
    // Elements are assigned from the largest down.
    let i = remaining - 1;
    let start = evens.partition_point(|&e| e < elems[i]);
    for ei in start..evens.len() {
        values[i] = evens[ei];
        hits[ei] += 1;
        let unhit_now = if hits[ei] == 1 { unhit - 1 } else { unhit };
        extend_staircase(elems, evens, i, unhit_now, hits, values, visit);
        hits[ei] -= 1;
    }
}

pub fn enumerate_staircases(s: &StaircaseSet, limits: &Limits) -> Result<Vec<SurjectiveStaircase>> {
    let mut out = Vec::new();
    for_each_staircase(s, limits, |v| out.push(SurjectiveStaircase { values: v.to_vec() }))?;
    out.sort();
    Ok(out)
}

pub fn count_staircases(s: &StaircaseSet, limits: &Limits) -> Result<u64> {
    let mut n = 0u64;
    for_each_staircase(s, limits, |_| n += 1)?;
    Ok(n)
}

/// Precomputed per-set data for the statistics.
struct StatContext {
    /// Whether each element lies in `S′`.
    in_prime: Vec<bool>,
    /// Least even element of `S` above each odd element.
    next_even: Vec<u32>,
    top: u32,
}

impl StatContext {
    fn new(s: &StaircaseSet) -> Self {
        let prime = s.set.prime();
        let elems = s.elements();
        let evens = s.set.even_part();
        StatContext {
            in_prime: elems.iter().map(|&a| prime.contains(a)).collect(),
            next_even: elems
                .iter()
                .map(|&a| evens.iter().copied().find(|&e| e > a).unwrap_or(0))
                .collect(),
            top: s.top(),
        }
    }

    fn stats(&self, elems: &[u32], values: &[u32]) -> StaircaseStats {
        let mut st = StaircaseStats::default();
        // How often each value is hit, keyed by value.
        let mut hit: BTreeMap<u32, u32> = BTreeMap::new();
        for &v in values {
            *hit.entry(v).or_insert(0) += 1;
        }
        for (i, &a) in elems.iter().enumerate() {
            if !self.in_prime[i] {
                continue;
            }
            let fa = values[i];
            if a % 2 == 1 {
                if fa == self.top {
                    st.mo += 1;
                } else if fa == self.next_even[i] {
                    // Isolated: no other element shares the image.
                    if hit[&fa] == 1 {
                        st.si += 1;
                    } else {
                        st.sd += 1;
                    }
                }
            } else if fa == self.top {
                st.me += 1;
            } else if fa == a {
                if hit[&fa] == 1 {
                    st.fi += 1;
                } else {
                    st.fd += 1;
                }
            }
        }
        st
    }
}

pub fn staircase_stats(s: &StaircaseSet, f: &SurjectiveStaircase) -> StaircaseStats {
    StatContext::new(s).stats(s.elements(), &f.values)
}

/// Whether `f` is an excedent surjection onto the even elements of `s`.
pub fn is_staircase(s: &StaircaseSet, f: &SurjectiveStaircase) -> bool {
    let elems = s.elements();
    if f.values.len() != elems.len() {
        return false;
    }
    let evens: BTreeSet<u32> = s.set.even_part().into_iter().collect();
    let image: BTreeSet<u32> = f.values.iter().copied().collect();
    image == evens && elems.iter().zip(&f.values).all(|(a, b)| b >= a)
}

/// Λ_S as the sum of staircase weights.
pub fn lambda_enum(s: &StaircaseSet, limits: &Limits) -> Result<SixVarPoly> {
    let ctx = StatContext::new(s);
    let mut counts: BTreeMap<[u32; 6], u64> = BTreeMap::new();
    for_each_staircase(s, limits, |v| {
        *counts.entry(ctx.stats(s.elements(), v).exponents()).or_insert(0) += 1;
    })?;
    Ok(SixVarPoly::from_terms(
        counts.into_iter().map(|(e, n)| (e, BigInt::from(n))),
    ))
}

/// Λ_S by the recurrence
/// `Λ_S = (y + x̄)(x + z̄)^ℓ Λ_{S′}(x + 1, x̄ + 1) + [x^ℓ(ȳ − y − x̄) + ℓ x^{ℓ−1} x̄ (z − z̄)] Λ_{S′}`,
/// with `ℓ = ell_rec(S)` and `Λ_S = 1` when `S′` is empty. The `ℓ x^{ℓ−1}`
/// term vanishes at `ℓ = 0`.
pub fn lambda_rec(s: &StaircaseSet) -> SixVarPoly {
    let Some(p) = s.prime() else {
        return SixVarPoly::one();
    };
    let inner = lambda_rec(&p);
    let l = s.ell_rec();
    let v = SixVarPoly::var;
    let lead = (v(Var::Y) + v(Var::XBar)) * Ring::pow(&(v(Var::X) + v(Var::ZBar)), l);
    let mut factor = Ring::pow(&v(Var::X), l) * (v(Var::YBar) - v(Var::Y) - v(Var::XBar));
    if l > 0 {
        factor = factor
            + SixVarPoly::constant(BigInt::from(l))
                * Ring::pow(&v(Var::X), l - 1)
                * v(Var::XBar)
                * (v(Var::Z) - v(Var::ZBar));
    }
    lead * inner.shift() + factor * inner
}

/// `V ∪ R_k` with `R_k = {M + 1, M + 3, ..., M + 2k − 1, M + 2k}`, `M = max V`.
pub fn augment_with_rk(v: &PositiveIntSet, k: u32) -> Result<StaircaseSet> {
    if !v.has_even_max() {
        return Err(domain(format!("{v} must be nonempty with an even maximum")));
    }
    if k == 0 {
        return Err(domain("k must be positive"));
    }
    let m = v.largest().expect("nonempty");
    let r = (0..k).map(|i| m + 2 * i + 1).chain(core::iter::once(m + 2 * k));
    StaircaseSet::new(v.union(&PositiveIntSet::new(r)?))
}

/// Extends a staircase `f` on `S′` to `S`: elements of `x` and of `S ∖ S′`
/// are sent to the maximum of `S`, everything else keeps its value.
pub fn hat_map(s: &StaircaseSet, f: &SurjectiveStaircase, x: &[u32]) -> Result<SurjectiveStaircase> {
    let p = s.prime().ok_or_else(|| domain("S′ is empty"))?;
    if f.values.len() != p.len() {
        return Err(domain("the staircase does not live on S′"));
    }
    let top = s.top();
    let values = s
        .elements()
        .iter()
        .map(|&a| match p.set.index_of(a) {
            Some(i) if !x.contains(&a) => f.values[i],
            _ => top,
        })
        .collect();
    Ok(SurjectiveStaircase { values })
}

/// Outcome of checking that `(F, X) ↦ F̂_X` is a bijection from pairs
/// (`F` a staircase on `S′`, `X` a proper subset of `F^{−1}(max S′)`) onto
/// the staircases of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopRowReport {
    pub pairs: usize,
    pub distinct_images: usize,
    pub staircases: usize,
    pub image_is_target: bool,
    pub counterexample: Option<String>,
}

impl TopRowReport {
    pub fn holds(&self) -> bool {
        self.pairs == self.distinct_images && self.image_is_target && self.counterexample.is_none()
    }
}

pub fn verify_top_row_bijection(s: &StaircaseSet, limits: &Limits) -> Result<TopRowReport> {
    let target: BTreeSet<SurjectiveStaircase> = enumerate_staircases(s, limits)?.into_iter().collect();
    let Some(p) = s.prime() else {
        return Ok(TopRowReport {
            pairs: 0,
            distinct_images: 0,
            staircases: target.len(),
            image_is_target: target.len() == 1,
            counterexample: None,
        });
    };
    let second = p.top();
    let mut images = BTreeSet::new();
    let mut pairs = 0;
    let mut counterexample = None;
    for f in enumerate_staircases(&p, limits)? {
        let pre: Vec<u32> = p
            .elements()
            .iter()
            .zip(&f.values)
            .filter(|&(_, &v)| v == second)
            .map(|(&a, _)| a)
            .collect();
        let full = (1u64 << pre.len()) - 1;
        for mask in 0..full {
            let x: Vec<u32> = (0..pre.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pre[i]).collect();
            let hat = hat_map(s, &f, &x)?;
            pairs += 1;
            if counterexample.is_none() && !target.contains(&hat) {
                counterexample = Some(format!("F = {:?}, X = {:?} gives {:?}", f.values, x, hat.values));
            }
            if !images.insert(hat.clone()) && counterexample.is_none() {
                counterexample = Some(format!("F = {:?}, X = {:?} repeats {:?}", f.values, x, hat.values));
            }
        }
    }
    Ok(TopRowReport {
        pairs,
        distinct_images: images.len(),
        staircases: target.len(),
        image_is_target: images == target,
        counterexample,
    })
}

/// Both sides of `Σ_{σ ∈ D_V} t^{c(σ)} = Λ_{V ∪ R_k}(t, t, 1, 0, t, 1)`,
/// each from its own enumeration.
pub fn dperm_specialization_sides(v: &PositiveIntSet, k: u32, limits: &Limits) -> Result<(UniPoly, UniPoly)> {
    let lhs = cycle_generating_poly(v, limits)?;
    let lambda = lambda_enum(&augment_with_rk(v, k)?, limits)?;
    let t = UniPoly::var();
    let assign = [t.clone(), t.clone(), UniPoly::one(), UniPoly::zero(), t, UniPoly::one()];
    Ok((lhs, lambda.eval(&assign)))
}

pub fn dperm_specialization_holds(v: &PositiveIntSet, k: u32, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = dperm_specialization_sides(v, k, limits)?;
    Ok(lhs == rhs)
}

impl fmt::Display for SurjectiveStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Text picture of a staircase on `s`: one row per even element from the
/// top, marking with `*` the elements sent to that row.
pub fn render_diagram(s: &StaircaseSet, f: &SurjectiveStaircase) -> String {
    let mut out = String::new();
    for e in s.set.even_part().iter().rev() {
        out.push_str(&format!("{e:>3} |"));
        for (&a, &v) in s.elements().iter().zip(&f.values) {
            let cell = if a > *e {
                ' '
            } else if v == *e {
                '*'
            } else {
                '.'
            };
            out.push(' ');
            out.push(cell);
        }
        out.push('\n');
    }
    out.push_str("    +");
    for a in s.elements() {
        out.push_str(&format!("{:>2}", a % 100));
    }
    out.push('\n');
    out
}
