use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// The six variables of Λ_S, in storage order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Odd maxima.
    X,
    /// Doubled fixed points.
    Y,
    /// Isolated surfixed points.
    Z,
    /// Even maxima.
    XBar,
    /// Isolated fixed points.
    YBar,
    /// Doubled surfixed points.
    ZBar,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::X, Var::Y, Var::Z, Var::XBar, Var::YBar, Var::ZBar];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Short ASCII name used by the JSON encoding.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::XBar => "xb",
            Var::YBar => "yb",
            Var::ZBar => "zb",
        }
    }
}

/// Exponent vector over `(x, y, z, x̄, ȳ, z̄)`.
pub type Exponents = [u32; 6];

/// Sparse integer polynomial in `x, y, z, x̄, ȳ, z̄`.
///
/// Terms are kept in lexicographic order of their exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SixVarPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl SixVarPoly {
    pub fn var(v: Var) -> Self {
        let mut e = [0; 6];
        e[v.index()] = 1;
        Self::monomial(BigInt::one(), e)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, [0; 6])
    }

    pub fn monomial(c: BigInt, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        SixVarPoly { terms }
    }

    /// Collects `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms(it: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.insert_add(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Sum of coefficients, i.e. the value at all-ones.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes every variable by an element of `R`.
    pub fn eval<R: Ring>(&self, assignment: &[R; 6]) -> R {
        let mut pows: [Vec<R>; 6] = Default::default();
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                let table = &mut pows[i];
                if table.is_empty() {
                    table.push(R::one());
                }
                while table.len() <= k as usize {
                    let next = table[table.len() - 1].clone() * assignment[i].clone();
                    table.push(next);
                }
            }
        }
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut term = R::from_integer(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term * pows[i][k as usize].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitutes `x -> x + by` and `x̄ -> x̄ + by`, other variables fixed.
    pub fn shift_by(&self, by: i64) -> Self {
        if by == 0 {
            return self.clone();
        }
        let by = BigInt::from(by);
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let xs = binomial_row(e[Var::X.index()], &by);
            let xbs = binomial_row(e[Var::XBar.index()], &by);
            for (i, a) in xs.iter().enumerate() {
                for (j, b) in xbs.iter().enumerate() {
                    let mut ne = *e;
                    ne[Var::X.index()] = i as u32;
                    ne[Var::XBar.index()] = j as u32;
                    out.insert_add(ne, c * a * b);
                }
            }
        }
        out
    }

    /// `Λ(x + 1, y, z, x̄ + 1, ȳ, z̄)`.
    pub fn shift(&self) -> Self {
        self.shift_by(1)
    }

    fn insert_add(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }
}

/// Coefficients of `(v + by)^n` in ascending powers of `v`.
fn binomial_row(n: u32, by: &BigInt) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut binom = BigInt::one();
    for i in 0..=n {
        // C(n, i) * by^(n - i)
        row.push(&binom * Ring::pow(by, n - i));
        binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    row
}

impl Zero for SixVarPoly {
    fn zero() -> Self {
        SixVarPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SixVarPoly {
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
}

impl<'a> Add<&'a SixVarPoly> for &'a SixVarPoly {
    type Output = SixVarPoly;

    fn add(self, rhs: &'a SixVarPoly) -> SixVarPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SixVarPoly> for &'a SixVarPoly {
    type Output = SixVarPoly;

    fn sub(self, rhs: &'a SixVarPoly) -> SixVarPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a SixVarPoly> for &'a SixVarPoly {
    type Output = SixVarPoly;

    fn mul(self, rhs: &'a SixVarPoly) -> SixVarPoly {
        let mut out = SixVarPoly::zero();
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let mut e = *ea;
                for i in 0..6 {
                    e[i] += eb[i];
                }
                out.insert_add(e, a * b);
            }
        }
        out
    }
}

impl Neg for &SixVarPoly {
    type Output = SixVarPoly;

    fn neg(self) -> SixVarPoly {
        SixVarPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for SixVarPoly {
    type Output = SixVarPoly;

    fn neg(self) -> SixVarPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SixVarPoly {
            type Output = SixVarPoly;
            fn $m(self, rhs: SixVarPoly) -> SixVarPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a SixVarPoly> for SixVarPoly {
            type Output = SixVarPoly;
            fn $m(self, rhs: &'a SixVarPoly) -> SixVarPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Ring for SixVarPoly {
    fn from_integer(n: BigInt) -> Self {
        Self::constant(n)
    }
}

impl fmt::Display for SixVarPoly {
    /// ASCII rendering such as `x*yb + y*zb + z*xb`, terms in descending
    /// lexicographic order of exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if !mag.is_one() || e.iter().all(|&k| k == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            for v in Var::ALL {
                let k = e[v.index()];
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v.name())?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SixVarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SixVarPoly({self})")
    }
}
