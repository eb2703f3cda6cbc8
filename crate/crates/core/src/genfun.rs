//! Closed-form generating functions for characteristic polynomials, the
//! symbolic series for Λ on the two canonical staircase families, the
//! Λ-evaluation formula for Dowling characteristic polynomials, and the
//! generalized Genocchi numbers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dperm::dperm_cycle_statistics;
use crate::error::{check_size, domain, Error, Result};
use crate::exactpoly::{
    falling_factorial, rising_factorial, series_sum_of_ratios, RatPoly, RatioTerm, Ring, SixVarPoly,
    TruncatedSeries, UniPoly, Var,
};
use crate::ferrers::{canonical_set, PositiveIntSet, WeakComposition};
use crate::limits::Limits;
use crate::staircase::{lambda_rec, StaircaseSet};

/// The polynomial families with a closed-form generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    KStaircase,
    KStaircaseChromatic,
    CompleteBipartite,
    DowlingKStaircase,
    DowlingCompleteBipartite,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::KStaircase,
        Family::KStaircaseChromatic,
        Family::CompleteBipartite,
        Family::DowlingKStaircase,
        Family::DowlingCompleteBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::KStaircase => "k-staircase",
            Family::KStaircaseChromatic => "k-staircase-chromatic",
            Family::CompleteBipartite => "complete-bipartite",
            Family::DowlingKStaircase => "dowling-k-staircase",
            Family::DowlingCompleteBipartite => "dowling-complete-bipartite",
        }
    }

    pub fn is_dowling(self) -> bool {
        matches!(self, Family::DowlingKStaircase | Family::DowlingCompleteBipartite)
    }

    /// The family member at `u^j` has `n = j + index_offset()` entries.
    pub fn index_offset(self) -> usize {
        usize::from(self.is_dowling())
    }

    /// The composition of the family member with `n` entries:
    /// `(k, ..., k)` for staircases and `(k, 0, ..., 0)` for complete
    /// bipartite graphs.
    pub fn composition(self, n: usize, k: u32) -> Result<WeakComposition> {
        match self {
            Family::KStaircase | Family::KStaircaseChromatic | Family::DowlingKStaircase => {
                WeakComposition::constant(n, k)
            }
            Family::CompleteBipartite | Family::DowlingCompleteBipartite => WeakComposition::leading(n, k),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| domain(format!("unknown family {s:?}")))
    }
}

/// A family with its parameters and the series order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: u32,
    pub m: u32,
    pub order: usize,
}

impl FamilySpec {
    pub fn series(&self) -> Result<TruncatedSeries<UniPoly>> {
        match self.family {
            Family::KStaircase => gf_k_staircase(self.k, self.order),
            Family::KStaircaseChromatic => gf_k_staircase_chromatic(self.k, self.order),
            Family::CompleteBipartite => gf_complete_bipartite(self.k, self.order),
            Family::DowlingKStaircase => gf_dowling_k_staircase(self.k, self.m, self.order),
            Family::DowlingCompleteBipartite => gf_dowling_complete_bipartite(self.k, self.m, self.order),
        }
    }
}

fn t() -> UniPoly {
    UniPoly::var()
}

fn t_minus(a: i64) -> UniPoly {
    UniPoly::linear(BigInt::from(a))
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(domain("k must be positive"))
    } else {
        Ok(())
    }
}

/// `Σ_{n≥1} (t−1)_{n−1} ((t−1)_n)^k u^n / Π_{i=1}^n (1 − i(t−i)^k u)`.
///
/// The coefficient of `u^n` is the characteristic polynomial of the
/// arrangement of `(k, ..., k)` with `n` entries.
pub fn gf_k_staircase(k: u32, order: usize) -> Result<TruncatedSeries<UniPoly>> {
    check_k(k)?;
    staircase_series(k, order, |n| falling_factorial(&t_minus(1), n - 1, 1))
}

/// As [`gf_k_staircase`] with `(t)_n` in place of `(t−1)_{n−1}`: chromatic
/// polynomials of the same Ferrers graphs.
pub fn gf_k_staircase_chromatic(k: u32, order: usize) -> Result<TruncatedSeries<UniPoly>> {
    check_k(k)?;
    staircase_series(k, order, |n| falling_factorial(&t(), n, 1))
}

fn staircase_series(k: u32, order: usize, lead: impl Fn(u32) -> UniPoly) -> Result<TruncatedSeries<UniPoly>> {
    let terms: Vec<_> = (1..=order as u32)
        .map(|n| {
            let num = lead(n) * Ring::pow(&falling_factorial(&t_minus(1), n, 1), k);
            (1..=n).fold(RatioTerm::new(num, n as usize), |term, i| {
                let i = i as i64;
                term.over_one_minus(Ring::pow(&t_minus(i), k).scale(&BigInt::from(i)))
            })
        })
        .collect();
    series_sum_of_ratios(&terms, order)
}

/// `Σ_{n≥1} (t)_n [(t−n)^k + (n−1)(t−(n−1))^{k−1}] u^n / Π_{i=0}^{n−1} (1 − i u)`.
///
/// The coefficient of `u^n` is the chromatic polynomial of `K_{n,k}`.
pub fn gf_complete_bipartite(k: u32, order: usize) -> Result<TruncatedSeries<UniPoly>> {
    check_k(k)?;
    let terms: Vec<_> = (1..=order as u32)
        .map(|n| {
            let ni = n as i64;
            let bracket = Ring::pow(&t_minus(ni), k)
                + Ring::pow(&t_minus(ni - 1), k - 1).scale(&BigInt::from(ni - 1));
            let num = falling_factorial(&t(), n, 1) * bracket;
            (0..n).fold(RatioTerm::new(num, n as usize), |term, i| {
                term.over_one_minus(UniPoly::constant(BigInt::from(i)))
            })
        })
        .collect();
    series_sum_of_ratios(&terms, order)
}

/// `Σ_{n≥1} (t−1)_{n−1,m} ((t−1)_{n,m})^k u^{n−1} / Π_{i=0}^{n−1} (1 − (im+1)(t−(im+1))^k u)`.
///
/// The coefficient of `u^{n−1}` is the Dowling characteristic polynomial
/// of order `m` for `(k, ..., k)` with `n` entries.
pub fn gf_dowling_k_staircase(k: u32, m: u32, order: usize) -> Result<TruncatedSeries<UniPoly>> {
    check_k(k)?;
    if m == 0 {
        return Err(domain("m must be positive"));
    }
    let terms: Vec<_> = (1..=order as u32 + 1)
        .map(|n| {
            let num = falling_factorial(&t_minus(1), n - 1, m) * Ring::pow(&falling_factorial(&t_minus(1), n, m), k);
            (0..n).fold(RatioTerm::new(num, n as usize - 1), |term, i| {
                let a = (i * m + 1) as i64;
                term.over_one_minus(Ring::pow(&t_minus(a), k).scale(&BigInt::from(a)))
            })
        })
        .collect();
    series_sum_of_ratios(&terms, order)
}

/// `(t−1)^k + Σ_{n≥2} (t−1)_{n−1,m} [(t−1−m(n−1))^k + (m(n−2)+1)(t−1−m(n−2))^{k−1}] u^{n−1} / Π_{i=0}^{n−2} (1 − (mi+1) u)`.
///
/// The coefficient of `u^{n−1}` is the Dowling characteristic polynomial
/// of order `m` for `(k, 0, ..., 0)` with `n` entries.
pub fn gf_dowling_complete_bipartite(k: u32, m: u32, order: usize) -> Result<TruncatedSeries<UniPoly>> {
    check_k(k)?;
    if m == 0 {
        return Err(domain("m must be positive"));
    }
    let mut terms = Vec::new();
    terms.push(RatioTerm::new(Ring::pow(&t_minus(1), k), 0));
    for n in 2..=order as u32 + 1 {
        let (n, m) = (n as i64, m as i64);
        let bracket = Ring::pow(&t_minus(1 + m * (n - 1)), k)
            + Ring::pow(&t_minus(1 + m * (n - 2)), k - 1).scale(&BigInt::from(m * (n - 2) + 1));
        let num = falling_factorial(&t_minus(1), n as u32 - 1, m as u32) * bracket;
        let term = (0..n - 1).fold(RatioTerm::new(num, n as usize - 1), |term, i| {
            term.over_one_minus(UniPoly::constant(BigInt::from(m * i + 1)))
        });
        terms.push(term);
    }
    series_sum_of_ratios(&terms, order)
}

fn var(v: Var) -> SixVarPoly {
    SixVarPoly::var(v)
}

fn check_lambda_order(order: usize, limits: &Limits) -> Result<()> {
    check_size("symbolic Λ series order", order, limits.lambda_series_max_order)
}

/// `Σ_{n≥1} (y+x̄)^{(n−1)} ((x+z̄)^{(n−1)})^k u^{n−1} / Π_{i=0}^{n−1} (1 − (x+i)^{k−1}[(x+i)(ȳ−y) + k(x̄+i)(z−z̄) − (x+i)(x̄+i)] u)`
/// with rising factorials `a^{(n)}`.
///
/// The coefficient of `u^{n−1}` is `Λ` of `S_n^k`.
pub fn gf_lambda_fixed_step(k: u32, order: usize, limits: &Limits) -> Result<TruncatedSeries<SixVarPoly>> {
    check_k(k)?;
    check_lambda_order(order, limits)?;
    let a = var(Var::Y) + var(Var::XBar);
    let b = var(Var::X) + var(Var::ZBar);
    let kk = SixVarPoly::constant(BigInt::from(k));
    let terms: Vec<_> = (1..=order as u32 + 1)
        .map(|n| {
            let num = rising_factorial(&a, n - 1) * Ring::pow(&rising_factorial(&b, n - 1), k);
            (0..n).fold(RatioTerm::new(num, n as usize - 1), |term, i| {
                let c = SixVarPoly::constant(BigInt::from(i));
                let xi = var(Var::X) + c.clone();
                let xbi = var(Var::XBar) + c;
                let f = Ring::pow(&xi, k - 1)
                    * (xi.clone() * (var(Var::YBar) - var(Var::Y))
                        + kk.clone() * xbi.clone() * (var(Var::Z) - var(Var::ZBar))
                        - xi * xbi);
                term.over_one_minus(f)
            })
        })
        .collect();
    series_sum_of_ratios(&terms, order)
}

/// `Λ` of `T_2^k`: `(y+x̄)(x+z̄)^k + x^{k−1}[x(ȳ−y) − k x̄(z̄−z) − x x̄]`.
pub fn lambda_two_row_complete_bipartite(k: u32) -> Result<SixVarPoly> {
    check_k(k)?;
    let kk = SixVarPoly::constant(BigInt::from(k));
    Ok((var(Var::Y) + var(Var::XBar)) * Ring::pow(&(var(Var::X) + var(Var::ZBar)), k)
        + Ring::pow(&var(Var::X), k - 1)
            * (var(Var::X) * (var(Var::YBar) - var(Var::Y))
                - kk * var(Var::XBar) * (var(Var::ZBar) - var(Var::Z))
                - var(Var::X) * var(Var::XBar)))
}

/// `1 + Σ_{n≥2} (y+x̄)^{(n−2)} Λ_{T_2^k}(x+n−2, x̄+n−2) u^{n−1} / Π_{i=0}^{n−2} (1 − (ȳ − y − (x̄+i)) u)`.
///
/// The coefficient of `u^{n−1}` is `Λ` of `T_n^k`.
pub fn gf_lambda_complete_bipartite(k: u32, order: usize, limits: &Limits) -> Result<TruncatedSeries<SixVarPoly>> {
    check_k(k)?;
    check_lambda_order(order, limits)?;
    let two_row = lambda_two_row_complete_bipartite(k)?;
    let a = var(Var::Y) + var(Var::XBar);
    let mut terms = alloc::vec![RatioTerm::new(SixVarPoly::one(), 0)];
    for n in 2..=order as u32 + 1 {
        let num = rising_factorial(&a, n - 2) * two_row.shift_by(i64::from(n - 2));
        let term = (0..n - 1).fold(RatioTerm::new(num, n as usize - 1), |term, i| {
            let f = var(Var::YBar) - var(Var::Y) - var(Var::XBar) - SixVarPoly::constant(BigInt::from(i));
            term.over_one_minus(f)
        });
        terms.push(term);
    }
    series_sum_of_ratios(&terms, order)
}

/// Dowling characteristic polynomial of order `q` from Λ of the canonical
/// set `V`:
/// `(−1)^{|V|−1} (1−t)^ℓ q^{|V|−ℓ−1} Λ_V((1−t)/q, (1−t)/q, 1, 0, −t/q, 1)`
/// with `ℓ` the number of odd elements above the second-largest even
/// element. Λ comes from the recurrence, so no enumeration is involved.
pub fn dowling_char_formula(nu: &WeakComposition, q: u32) -> Result<UniPoly> {
    if q == 0 {
        return Err(domain("q must be at least 1"));
    }
    let v = StaircaseSet::new(canonical_set(nu)?)?;
    let lambda = lambda_rec(&v);
    dowling_from_lambda(&v, &lambda, q)
}

/// The evaluation step of [`dowling_char_formula`] for a given `Λ_V`.
pub fn dowling_from_lambda(v: &StaircaseSet, lambda: &SixVarPoly, q: u32) -> Result<UniPoly> {
    let l = v.ell_top();
    let size = v.len() as u32;
    let qr = BigRational::from_integer(BigInt::from(q));
    let inv_q = RatPoly::constant(qr.recip());
    let one = RatPoly::one();
    let tr = RatPoly::var();
    let omt = &one - &tr;
    let a = &omt * &inv_q;
    let assign = [a.clone(), a, one.clone(), RatPoly::zero(), -(&tr * &inv_q), one];
    let mut value = lambda.eval(&assign);
    value = value * Ring::pow(&omt, l) * RatPoly::constant(Ring::pow(&qr, size - l - 1));
    if size.is_multiple_of(2) {
        value = -value;
    }
    value
        .to_integer()
        .ok_or_else(|| Error::Invariant(format!("the Dowling evaluation for {v} has fractional coefficients")))
}

/// `g_{n,k}` for `n = 1..=count`, from
/// `Σ_{n≥1} (n−1)! (n!)^k u^n / Π_{i=1}^n (1 + i^{k+1} u)`.
pub fn gf_genocchi(k: u32, count: usize) -> Result<Vec<BigInt>> {
    check_k(k)?;
    let terms: Vec<_> = (1..=count as u32)
        .map(|n| {
            let num = factorial(n - 1) * Ring::pow(&factorial(n), k);
            (1..=n).fold(RatioTerm::new(num, n as usize), |term, i| {
                term.over_one_minus(-Ring::pow(&BigInt::from(i), k + 1))
            })
        })
        .collect();
    Ok(series_sum_of_ratios(&terms, count)?.into_coeffs().split_off(1))
}

/// `h_{n,k}` for `n = 1..=count`, from
/// `Σ_{n≥1} n! ((n+1)!)^k u^n / Π_{i=1}^n (1 + i(i+1)^k u)`.
pub fn gf_median_genocchi(k: u32, count: usize) -> Result<Vec<BigInt>> {
    check_k(k)?;
    let terms: Vec<_> = (1..=count as u32)
        .map(|n| {
            let num = factorial(n) * Ring::pow(&factorial(n + 1), k);
            (1..=n).fold(RatioTerm::new(num, n as usize), |term, i| {
                term.over_one_minus(-(BigInt::from(i) * Ring::pow(&BigInt::from(i + 1), k)))
            })
        })
        .collect();
    Ok(series_sum_of_ratios(&terms, count)?.into_coeffs().split_off(1))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Sign `(−1)^{nk+n−1}` relating `χ(0)` and `χ(−1)` of the `(k, ..., k)`
/// arrangement to `g_{n,k}` and `h_{n,k}`.
pub fn genocchi_sign(n: u32, k: u32) -> BigInt {
    if (n * k + n - 1).is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `h^j` counts D-permutations of `S_{n−1}^k` with exactly `j` cycles that
/// are not even fixed points, and `Σ_j h^j 2^{j+k}` should equal `h_{n,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenocchiDecomposition {
    pub n: u32,
    pub k: u32,
    pub counts: BTreeMap<usize, u64>,
    pub weighted_sum: BigInt,
    pub expected: BigInt,
}

impl GenocchiDecomposition {
    pub fn holds(&self) -> bool {
        self.weighted_sum == self.expected
    }
}

/// `S_{n−1}^k`, empty when `n = 1`.
fn lower_fixed_step_set(n: u32, k: u32) -> Result<PositiveIntSet> {
    if n == 1 {
        Ok(PositiveIntSet::empty())
    } else {
        Ok(StaircaseSet::fixed_step(n - 1, k)?.set().clone())
    }
}

pub fn median_genocchi_decomposition(n: u32, k: u32, limits: &Limits) -> Result<GenocchiDecomposition> {
    check_k(k)?;
    if n == 0 {
        return Err(domain("n must be positive"));
    }
    let set = lower_fixed_step_set(n, k)?;
    let mut counts = BTreeMap::new();
    for ((_, other), c) in dperm_cycle_statistics(&set, limits)? {
        *counts.entry(other).or_insert(0) += c;
    }
    let two = BigInt::from(2);
    let weighted_sum = counts
        .iter()
        .map(|(&j, &c)| BigInt::from(c) * Ring::pow(&two, j as u32 + k))
        .sum();
    let expected = gf_median_genocchi(k, n as usize)?.pop().expect("n ≥ 1");
    Ok(GenocchiDecomposition {
        n,
        k,
        counts,
        weighted_sum,
        expected,
    })
}

/// `(−1)^{nk+n−1} (1−t)^k Σ_{σ ∈ D_{S_{n−1}^k}} (−t)^{efp(σ)} (1−t)^{other(σ)}`,
/// which should equal the characteristic polynomial of the `(k, ..., k)`
/// arrangement with `n` entries.
pub fn even_fixed_point_form(n: u32, k: u32, limits: &Limits) -> Result<UniPoly> {
    check_k(k)?;
    if n == 0 {
        return Err(domain("n must be positive"));
    }
    let set = lower_fixed_step_set(n, k)?;
    let omt = UniPoly::from_ints(&[1, -1]);
    let mt = UniPoly::from_ints(&[0, -1]);
    let mut sum = UniPoly::zero();
    for ((efp, other), c) in dperm_cycle_statistics(&set, limits)? {
        sum = sum
            + (Ring::pow(&mt, efp as u32) * Ring::pow(&omt, other as u32)).scale(&BigInt::from(c));
    }
    Ok((Ring::pow(&omt, k) * sum).scale(&genocchi_sign(n, k)))
}
