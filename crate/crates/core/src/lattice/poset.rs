use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::UniPoly;

/// Finite ranked poset with a bottom element.
///
/// Elements are stored in an order compatible with rank (index 0 is the
/// bottom), and each element keeps the sorted indices of the elements
/// strictly below it.
#[derive(Debug, Clone)]
pub struct RankedPoset<K> {
    elements: Vec<K>,
    ranks: Vec<u32>,
    below: Vec<Vec<u32>>,
}

impl<K> RankedPoset<K> {
    /// Validates the layout: ranks nondecreasing, index 0 of rank 0 below
    /// every other element, and down-sets pointing to earlier indices.
    pub fn new(elements: Vec<K>, ranks: Vec<u32>, mut below: Vec<Vec<u32>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 || ranks.len() != n || below.len() != n {
            return Err(Error::Invariant("poset tables have inconsistent sizes".into()));
        }
        if ranks[0] != 0 || ranks.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invariant("elements are not sorted by rank".into()));
        }
        for (i, d) in below.iter_mut().enumerate() {
            d.sort_unstable();
            d.dedup();
            if d.last().is_some_and(|&j| j as usize >= i) {
                return Err(Error::Invariant("a down-set points forward".into()));
            }
            if i > 0 && d.first() != Some(&0) {
                return Err(Error::Invariant("index 0 is not the bottom element".into()));
            }
        }
        Ok(RankedPoset { elements, ranks, below })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn rank(&self, i: usize) -> u32 {
        self.ranks[i]
    }

    /// Largest rank.
    pub fn length(&self) -> u32 {
        *self.ranks.last().expect("nonempty")
    }

    /// Indices strictly below `i`, ascending.
    pub fn below(&self, i: usize) -> &[u32] {
        &self.below[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.below[b].binary_search(&(a as u32)).is_ok()
    }

    /// `μ(0̂, x)` for every element `x`.
    pub fn mobius_from_bottom(&self) -> Vec<BigInt> {
        let mut mu: Vec<BigInt> = Vec::with_capacity(self.len());
        mu.push(BigInt::one());
        for i in 1..self.len() {
            let s: BigInt = self.below[i].iter().map(|&j| &mu[j as usize]).sum();
            mu.push(-s);
        }
        mu
    }

    /// `μ(a, x)` for every `x`, zero where `a ≰ x`.
    pub fn mobius_row(&self, a: usize) -> Vec<BigInt> {
        let mut mu = vec![BigInt::zero(); self.len()];
        mu[a] = BigInt::one();
        for b in a + 1..self.len() {
            if !self.leq(a, b) {
                continue;
            }
            let s: BigInt = self.below[b]
                .iter()
                .filter(|&&z| self.leq(a, z as usize))
                .map(|&z| &mu[z as usize])
                .sum();
            mu[b] = -s;
        }
        mu
    }

    /// `χ(t) = Σ_x μ(0̂, x) t^{length − rk(x)}`.
    pub fn char_poly(&self) -> UniPoly {
        let len = self.length();
        let mut p = UniPoly::zero();
        for (i, m) in self.mobius_from_bottom().into_iter().enumerate() {
            p = p + UniPoly::monomial(m, len - self.ranks[i]);
        }
        p
    }

    /// Checks `Σ_{a ≤ z ≤ b} μ(z, b) = [a = b]` for every pair, with `μ`
    /// computed row by row from the other side. Cubic in the size.
    pub fn check_mobius_identity(&self) -> bool {
        let rows: Vec<Vec<BigInt>> = (0..self.len()).map(|a| self.mobius_row(a)).collect();
        for b in 0..self.len() {
            for a in 0..=b {
                if !self.leq(a, b) {
                    continue;
                }
                let mut s = BigInt::zero();
                for z in a..=b {
                    if self.leq(a, z) && self.leq(z, b) {
                        s += &rows[z][b];
                    }
                }
                let expect = if a == b { BigInt::one() } else { BigInt::zero() };
                if s != expect {
                    return false;
                }
            }
        }
        true
    }
}
