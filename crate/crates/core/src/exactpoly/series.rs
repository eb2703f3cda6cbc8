use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::Ring;

/// Power series in `u` truncated after `u^order`, with coefficients in `R`.
///
/// Arithmetic discards every power of `u` above the order and is exact below
/// it. Mixing orders truncates to the smaller one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(R::one(), 0, order)
    }

    /// `c * u^power`; vanishes when `power > order`.
    pub fn monomial(c: R, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Ascending coefficients; entries beyond the order are dropped and
    /// missing ones are zero.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = R>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, j: usize) -> &R {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order.min(self.order))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|j| self.coeffs[j].clone() + rhs.coeffs[j].clone())
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|j| self.coeffs[j].clone() - rhs.coeffs[j].clone())
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].clone() * rhs.coeffs[j].clone();
                out.coeffs[i + j] = out.coeffs[i + j].clone() + prod;
            }
        }
        out
    }

    pub fn scale(&self, by: &R) -> Self {
        self.map(|c| c.clone() * by.clone())
    }

    /// Multiplicative inverse of a series whose constant term is exactly 1.
    pub fn reciprocal(&self) -> Option<Self> {
        if self.coeffs[0] != R::one() {
            return None;
        }
        let mut inv = Self::zero(self.order);
        inv.coeffs[0] = R::one();
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * inv.coeffs[n - k].clone();
            }
            inv.coeffs[n] = -acc;
        }
        Some(inv)
    }

    /// `1 / (1 - f u)` expanded as `Σ f^j u^j`.
    pub fn geometric(f: &R, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut p = R::one();
        for j in 0..=order {
            s.coeffs[j] = p.clone();
            p = p * f.clone();
        }
        s
    }
}

/// One summand `numerator * u^power / Π_i factor_i(u)`.
///
/// Each denominator factor is a polynomial in `u` given by its ascending
/// coefficients and must have constant term 1.
#[derive(Clone, Debug)]
pub struct RatioTerm<R> {
    pub numerator: R,
    pub power: usize,
    pub denominators: Vec<Vec<R>>,
}

impl<R: Ring> RatioTerm<R> {
    pub fn new(numerator: R, power: usize) -> Self {
        RatioTerm {
            numerator,
            power,
            denominators: Vec::new(),
        }
    }

    /// Appends the factor `1 - f u`.
    pub fn over_one_minus(mut self, f: R) -> Self {
        self.denominators.push(vec![R::one(), -f]);
        self
    }
}

/// Sums `Σ numerator_n u^{p_n} / Π_i factor_{n,i}` up to `u^order`.
///
/// Terms whose `u`-valuation exceeds the order contribute nothing and are
/// skipped without touching their denominators.
pub fn series_sum_of_ratios<R: Ring>(terms: &[RatioTerm<R>], order: usize) -> Result<TruncatedSeries<R>> {
    let mut total = TruncatedSeries::<R>::zero(order);
    for (ti, term) in terms.iter().enumerate() {
        for (fi, f) in term.denominators.iter().enumerate() {
            let c0 = f.first().cloned().unwrap_or_else(R::zero);
            if c0 != R::one() {
                return Err(Error::NonUnitDenominator {
                    term: ti,
                    index: fi,
                    found: format!("{c0:?}"),
                });
            }
        }
        if term.power > order || term.numerator.is_zero() {
            continue;
        }
        let budget = order - term.power;
        let mut acc = TruncatedSeries::monomial(term.numerator.clone(), 0, budget);
        for f in &term.denominators {
            let inv = if f.len() == 2 {
                TruncatedSeries::geometric(&(-f[1].clone()), budget)
            } else {
                TruncatedSeries::from_coeffs(f.iter().cloned(), budget)
                    .reciprocal()
                    .expect("constant term checked above")
            };
            acc = acc.mul(&inv);
        }
        for j in 0..=budget {
            let c = acc.coeffs[j].clone();
            if !c.is_zero() {
                total.coeffs[term.power + j] = total.coeffs[term.power + j].clone() + c;
            }
        }
    }
    Ok(total)
}
