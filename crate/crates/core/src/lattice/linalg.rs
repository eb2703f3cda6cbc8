//! Exact dense linear algebra over the integers and rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<BigRational>>;
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_rational(m: &[Vec<BigInt>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Brings `m` to reduced row-echelon form in place, drops zero rows and
/// returns the pivot columns. The result is canonical for the row space.
pub fn rref(m: &mut RatMatrix) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] -= d;
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn det_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Inverse by Gauss–Jordan elimination, `None` when singular.
pub fn inverse(m: &[Vec<BigRational>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mul_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mul_vec_rat(a: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn identity_int(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Whether the determinant is `±1`.
pub fn is_unimodular(m: &[Vec<BigInt>]) -> bool {
    det_int(m).abs().is_one()
}

pub fn zero_rat(rows: usize, cols: usize) -> RatMatrix {
    vec![vec![BigRational::zero(); cols]; rows]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(det_int(&ints(&[&[2, 1], &[7, 4]])), BigInt::from(1));
        assert_eq!(det_int(&ints(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_int(&ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
        assert_eq!(det_int(&ints(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = to_rational(&ints(&[&[2, 4, 2], &[1, 2, 3], &[3, 6, 5]]));
        let mut b = to_rational(&ints(&[&[0, 0, 4], &[1, 2, 1]]));
        let pa = rref(&mut a);
        let pb = rref(&mut b);
        assert_eq!(pa, vec![0, 2]);
        assert_eq!(pa, pb);
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = ints(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = inverse(&to_rational(&m)).unwrap();
        let id = to_rational(&identity_int(3));
        let prod: RatMatrix = to_rational(&m)
            .iter()
            .map(|row| {
                (0..3)
                    .map(|j| (0..3).map(|k| &row[k] * &inv[k][j]).sum())
                    .collect()
            })
            .collect();
        assert_eq!(prod, id);
        assert!(inverse(&to_rational(&ints(&[&[1, 2], &[2, 4]]))).is_none());
    }
}
