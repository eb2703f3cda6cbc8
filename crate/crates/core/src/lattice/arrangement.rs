use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_size, domain, Result};
use crate::exactpoly::UniPoly;
use crate::ferrers::WeakComposition;
use crate::limits::Limits;

use super::linalg::rref;
use super::RankedPoset;

/// The affine hyperplane `normal · x = offset`, scaled so that the first
/// nonzero coordinate of the normal is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalHyperplane {
    normal: Vec<BigRational>,
    offset: BigRational,
}

impl RationalHyperplane {
    pub fn new(normal: Vec<BigRational>, offset: BigRational) -> Result<Self> {
        let Some(lead) = normal.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(domain("a hyperplane needs a nonzero normal"));
        };
        let normal = normal.iter().map(|c| c / &lead).collect();
        Ok(RationalHyperplane {
            normal,
            offset: offset / lead,
        })
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self> {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        Self::new(normal.iter().map(|&x| r(x)).collect(), r(offset))
    }

    pub fn normal(&self) -> &[BigRational] {
        &self.normal
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    fn row(&self) -> Vec<BigRational> {
        let mut r = self.normal.clone();
        r.push(self.offset.clone());
        r
    }
}

impl fmt::Display for RationalHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "w{}", i + 1)?;
            first = false;
        }
        write!(f, " = {}", self.offset)
    }
}

/// A nonempty affine subspace, stored as the reduced row-echelon form of
/// its defining system `[A | b]`. Equal flats have identical forms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineFlat {
    dim: usize,
    rows: Vec<Vec<BigRational>>,
}

impl AffineFlat {
    pub fn ambient(dim: usize) -> Self {
        AffineFlat { dim, rows: Vec::new() }
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Intersection with a hyperplane, `None` when empty.
    pub fn intersect(&self, h: &RationalHyperplane) -> Option<AffineFlat> {
        let mut rows = self.rows.clone();
        rows.push(h.row());
        let pivots = rref(&mut rows);
        if pivots.last() == Some(&self.dim) {
            return None;
        }
        Some(AffineFlat { dim: self.dim, rows })
    }

    pub fn lies_in(&self, h: &RationalHyperplane) -> bool {
        self.intersect(h).is_some_and(|g| g.codim() == self.codim())
    }
}

/// The hyperplanes `x_i − x_j − y_i^(ℓ) = 0` for `1 ≤ i < j ≤ n + 1` and
/// `ℓ ≤ ν_i`, in coordinates `(x_1, ..., x_{n+1}, y_1^(1), ..., y_n^(ν_n))`.
pub fn build_arrangement_nu(nu: &WeakComposition, limits: &Limits) -> Result<Vec<RationalHyperplane>> {
    check_size("arrangement", nu.hyperplane_count(), limits.hyperplane_max)?;
    let n = nu.n();
    let dim = n + 1 + nu.m() as usize;
    let mut out = Vec::with_capacity(nu.hyperplane_count());
    let mut y = n + 1;
    for (i, &v) in nu.parts().iter().enumerate() {
        for _ in 0..v {
            for j in i + 1..=n {
                let mut normal = vec![0i64; dim];
                normal[i] = 1;
                normal[j] = -1;
                normal[y] = -1;
                out.push(RationalHyperplane::from_ints(&normal, 0)?);
            }
            y += 1;
        }
    }
    Ok(out)
}

/// The poset of nonempty intersections ordered by reverse inclusion,
/// ranked by codimension, with the ambient space at the bottom.
pub fn intersection_poset(hs: &[RationalHyperplane], limits: &Limits) -> Result<RankedPoset<AffineFlat>> {
    check_size("arrangement", hs.len(), limits.hyperplane_max.min(64))?;
    let dim = hs.first().map_or(0, RationalHyperplane::dim);
    if hs.iter().any(|h| h.dim() != dim) {
        return Err(domain("hyperplanes live in different dimensions"));
    }
    let mask_of = |f: &AffineFlat| -> u64 {
        hs.iter()
            .enumerate()
            .filter(|(_, h)| f.lies_in(h))
            .fold(0, |m, (i, _)| m | 1 << i)
    };
    let ambient = AffineFlat::ambient(dim);
    let mut found: BTreeMap<AffineFlat, u64> = BTreeMap::new();
    found.insert(ambient.clone(), 0);
    let mut queue = VecDeque::from([(ambient, 0u64)]);
    while let Some((flat, mask)) = queue.pop_front() {
        for (i, h) in hs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                continue;
            }
            let Some(g) = flat.intersect(h) else {
                continue;
            };
            if found.contains_key(&g) {
                continue;
            }
            let m = mask_of(&g);
            found.insert(g.clone(), m);
            queue.push_back((g, m));
        }
    }
    let mut flats: Vec<(AffineFlat, u64)> = found.into_iter().collect();
    flats.sort_by(|a, b| a.0.codim().cmp(&b.0.codim()).then_with(|| a.0.cmp(&b.0)));
    // X ≤ Y exactly when every hyperplane through X also passes through Y.
    let below = flats
        .iter()
        .enumerate()
        .map(|(j, (_, mj))| {
            (0..j)
                .filter(|&i| flats[i].1 & !mj == 0 && flats[i].1 != *mj)
                .map(|i| i as u32)
                .collect()
        })
        .collect();
    let ranks = flats.iter().map(|(f, _)| f.codim() as u32).collect();
    RankedPoset::new(flats.into_iter().map(|(f, _)| f).collect(), ranks, below)
}

/// Number of regions, `(−1)^{rank} χ(−1)`.
pub fn regions(hs: &[RationalHyperplane], limits: &Limits) -> Result<BigInt> {
    let p = intersection_poset(hs, limits)?;
    let chi: UniPoly = p.char_poly();
    let v = chi.eval(&BigInt::from(-1));
    Ok(if p.length() % 2 == 0 { v } else { -v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lim() -> Limits {
        Limits::default()
    }

    fn h(normal: &[i64], offset: i64) -> RationalHyperplane {
        RationalHyperplane::from_ints(normal, offset).unwrap()
    }

    #[test]
    fn canonical_hyperplanes() {
        assert_eq!(h(&[2, -4], 6), h(&[1, -2], 3));
        assert!(RationalHyperplane::from_ints(&[0, 0], 1).is_err());
        assert_eq!(h(&[0, 2, 1], 1).to_string(), "w2 + 1/2*w3 = 1/2");
    }

    #[test]
    fn single_and_parallel() {
        let one = [h(&[1, 0], 0)];
        assert_eq!(intersection_poset(&one, &lim()).unwrap().char_poly(), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(regions(&one, &lim()).unwrap(), BigInt::from(2));
        let parallel = [h(&[1], 0), h(&[1], 1)];
        let p = intersection_poset(&parallel, &lim()).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.char_poly(), UniPoly::from_ints(&[-2, 1]));
        assert_eq!(regions(&parallel, &lim()).unwrap(), BigInt::from(3));
    }

    #[test]
    fn generic_lines_in_the_plane() {
        // Three lines in general position: 7 regions.
        let lines = [h(&[1, 0], 0), h(&[0, 1], 0), h(&[1, 1], 1)];
        assert_eq!(regions(&lines, &lim()).unwrap(), BigInt::from(7));
        let p = intersection_poset(&lines, &lim()).unwrap();
        assert!(p.check_mobius_identity());
    }

    #[test]
    fn nu_arrangements() {
        let nu = |v: &[u32]| WeakComposition::new(v.iter().copied()).unwrap();
        let h3 = build_arrangement_nu(&nu(&[1, 1]), &lim()).unwrap();
        assert_eq!(h3.len(), 3);
        assert_eq!(h3[0].dim(), 5);
        let t1 = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(intersection_poset(&h3, &lim()).unwrap().char_poly(), &(&t1 * &t1) * &t1);
        assert_eq!(regions(&h3, &lim()).unwrap(), BigInt::from(8));
        let two = build_arrangement_nu(&nu(&[2]), &lim()).unwrap();
        assert_eq!(two, vec![h(&[1, -1, -1, 0], 0), h(&[1, -1, 0, -1], 0)]);
        assert_eq!(build_arrangement_nu(&nu(&[1, 0]), &lim()).unwrap().len(), 2);
        assert_eq!(regions(&build_arrangement_nu(&nu(&[1]), &lim()).unwrap(), &lim()).unwrap(), BigInt::from(2));
    }

    #[test]
    fn hyperplane_bound() {
        let nu = WeakComposition::new([3, 3, 3]).unwrap();
        assert!(build_arrangement_nu(&nu, &lim()).is_err());
    }
}
