use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// Sparse univariate polynomial in `t` over the ring `C`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<C> {
    coeffs: BTreeMap<u32, C>,
}

/// Integer polynomial; the output type of every characteristic polynomial
/// route.
pub type UniPoly = Poly<BigInt>;

/// Rational polynomial, used only for intermediate Dowling evaluations.
pub type RatPoly = Poly<BigRational>;

impl<C: Ring> Poly<C> {
    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Poly { coeffs }
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `t - a`.
    pub fn linear(a: C) -> Self {
        Self::var() - Self::constant(a)
    }

    /// Builds from ascending dense coefficients.
    pub fn from_coeffs(dense: impl IntoIterator<Item = C>) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c))
            .collect();
        Poly { coeffs }
    }

    pub fn from_ints(dense: &[i64]) -> Self {
        Self::from_coeffs(dense.iter().map(|&c| C::from_i64(c)))
    }

    pub fn coeff(&self, exp: u32) -> C {
        self.coeffs.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.values().next_back().cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &C)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Ascending dense coefficient list without trailing zeros.
    pub fn dense_coeffs(&self) -> Vec<C> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (&e, c) in self.coeffs.iter().rev() {
            acc = acc * at.pow(prev - e) + c.clone();
            prev = e;
        }
        acc * at.pow(prev)
    }

    /// Substitutes `t -> value` for `value` in any ring containing `C`.
    pub fn substitute<R: Ring>(&self, value: &R, embed: impl Fn(&C) -> R) -> R {
        let mut acc = R::zero();
        for (e, c) in self.terms() {
            acc = acc + embed(c) * value.pow(e);
        }
        acc
    }

    pub fn scale(&self, by: &C) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e, c.clone() * by.clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly { coeffs }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e, f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly { coeffs }
    }

    /// Multiplies by `t^k`.
    pub fn shift_degree(&self, k: u32) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Euclidean division by a divisor whose leading coefficient is ±1.
    ///
    /// Returns `None` when the divisor is zero or its leading coefficient is
    /// not a unit of the form ±1.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading_coeff();
        let lead_is_one = lead == C::one();
        if !lead_is_one && lead != -C::one() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff();
            let c = if lead_is_one { c } else { -c };
            let step = Self::monomial(c, rd - dd);
            rem = rem - &step * divisor;
            quot = quot + step;
        }
        Some((quot, rem))
    }

    fn insert_add(&mut self, exp: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(exp, sum);
                }
            }
            None => {
                self.coeffs.insert(exp, c);
            }
        }
    }
}

impl UniPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl RatPoly {
    /// `Some` iff every coefficient is an integer.
    pub fn to_integer(&self) -> Option<UniPoly> {
        let mut coeffs = BTreeMap::new();
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return None;
            }
            coeffs.insert(e, c.to_integer());
        }
        Some(Poly { coeffs })
    }
}

/// `base (base - step) ... (base - (n-1) step)`; the empty product is 1.
pub fn falling_factorial<R: Ring>(base: &R, n: u32, step: u32) -> R {
    (0..n).fold(R::one(), |acc, j| {
        acc * (base.clone() - R::from_i64(i64::from(j) * i64::from(step)))
    })
}

/// `base (base + 1) ... (base + n - 1)`.
pub fn rising_factorial<R: Ring>(base: &R, n: u32) -> R {
    (0..n).fold(R::one(), |acc, j| acc * (base.clone() + R::from_i64(i64::from(j))))
}

impl<C: Ring> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for Poly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<'a, C: Ring> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.insert_add(e, c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.insert_add(e, -c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (&ea, a) in &self.coeffs {
            for (&eb, b) in &rhs.coeffs {
                out.insert_add(ea + eb, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C: Ring> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl<C: Ring> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, C: Ring> $tr<&'a Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &'a Poly<C>) -> Poly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Ring> Ring for Poly<C> {
    fn from_integer(n: BigInt) -> Self {
        Self::constant(C::from_integer(n))
    }
}

impl<C: Ring + fmt::Display + Signed> fmt::Display for Poly<C> {
    /// ASCII rendering, highest degree first: `t^3 - 3*t^2 + 3*t - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn falling_factorial_examples() {
        let base = p(&[-1, 1]);
        assert_eq!(falling_factorial(&base, 0, 1), p(&[1]));
        assert_eq!(falling_factorial(&base, 2, 1), p(&[2, -3, 1]));
        assert_eq!(falling_factorial(&base, 2, 2), p(&[3, -4, 1]));
    }

    #[test]
    fn rising_factorial_examples() {
        let t = UniPoly::var();
        assert_eq!(rising_factorial(&t, 0), p(&[1]));
        assert_eq!(rising_factorial(&t, 2), p(&[0, 1, 1]));
        for n in 0..=6u32 {
            let shifted = &t + &p(&[i64::from(n) - 1]);
            assert_eq!(rising_factorial(&t, n), falling_factorial(&shifted, n, 1));
        }
    }

    #[test]
    fn falling_factorial_at_n_is_factorial() {
        let t = UniPoly::var();
        let mut fact = BigInt::one();
        for n in 0..=8u32 {
            if n > 0 {
                fact *= BigInt::from(n);
            }
            let v = falling_factorial(&t, n, 1).eval(&BigInt::from(n));
            assert_eq!(v, fact);
        }
    }

    #[test]
    fn zero_pruning_and_degree() {
        let a = p(&[1, 2, 3]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.dense_coeffs(), Vec::<BigInt>::new());
        assert_eq!(p(&[0, 0, 5, 0]).degree(), Some(2));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 3, -3, 1]).to_string(), "t^3 - 3*t^2 + 3*t - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn division_by_monic() {
        let cube = p(&[-1, 3, -3, 1]);
        let (q, r) = cube.div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, -2, 1]));
        assert!(r.is_zero());
        let (_, r) = p(&[1, 0, 1]).div_rem(&p(&[1, -1])).unwrap();
        assert_eq!(r, p(&[2]));
        assert!(p(&[1, 2]).div_rem(&p(&[1, 2])).is_none());
    }

    #[test]
    fn eval_and_rational_roundtrip() {
        let a = p(&[2, -3, 1]);
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(2));
        assert_eq!(a.eval(&BigInt::zero()), BigInt::from(2));
        assert_eq!(a.to_rational().to_integer(), Some(a.clone()));
        let half = RatPoly::constant(BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_integer(), None);
    }
}
