use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with an embedding of the integers.
///
/// Implemented for [`BigInt`], [`BigRational`], polynomials over a ring and
/// [`super::SixVarPoly`], so that series and evaluation code can be written
/// once.
pub trait Ring:
    Clone
    + PartialEq
    + core::fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_integer(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    fn from_integer(n: BigInt) -> Self {
        n
    }
}

impl Ring for BigRational {
    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
}
