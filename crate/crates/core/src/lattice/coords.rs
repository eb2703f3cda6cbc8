use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::ferrers::WeakComposition;
use crate::limits::Limits;

use super::arrangement::{build_arrangement_nu, RationalHyperplane};
use super::linalg::{det_int, identity_int, inverse, mul_int, mul_vec_rat, to_rational, transpose, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum UVec {
    /// `u_{2i−1}^(ℓ)`
    Odd(usize, u32),
    /// `u_{2j}`
    Even(usize),
    /// `u_{m+n+1}`
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VVec {
    /// `v_i`, `1 ≤ i ≤ n + 1`
    X(usize),
    /// `v_{n+i+1}^(ℓ)`
    Y(usize, u32),
}

/// The integer matrices relating the graphic arrangement of `G_ν` (plus an
/// isolated vertex, coordinates `u`) to `H_ν` (coordinates `v`), and the
/// outcome of checking them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateMapReport {
    pub u_labels: Vec<String>,
    pub v_labels: Vec<String>,
    /// Column `c` holds `φ(u_c)` in the `v` basis.
    pub phi: IntMatrix,
    /// Column `c` holds `φ̃(v_c)` in the `u` basis.
    pub phi_tilde: IntMatrix,
    /// `ψ = (φ^{−1})^T`.
    pub psi: IntMatrix,
    pub det: BigInt,
    pub phi_times_phi_tilde_is_identity: bool,
    pub psi_is_inverse_transpose: bool,
    /// `(graphic hyperplane, image under ψ)` pairs.
    pub mapped: Vec<(String, String)>,
    pub failures: Vec<String>,
}

impl CoordinateMapReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn coordinate_map_nu(nu: &WeakComposition) -> Result<CoordinateMapReport> {
    let n = nu.n();
    let mut ub = Vec::new();
    for (i, &v) in nu.parts().iter().enumerate() {
        ub.extend((1..=v).map(|l| UVec::Odd(i + 1, l)));
        ub.push(UVec::Even(i + 1));
    }
    ub.push(UVec::Top);
    let mut vb: Vec<VVec> = (1..=n + 1).map(VVec::X).collect();
    for (i, &v) in nu.parts().iter().enumerate() {
        vb.extend((1..=v).map(|l| VVec::Y(i + 1, l)));
    }
    let dim = ub.len();
    let ui = |u: UVec| ub.iter().position(|&x| x == u).expect("basis vector");
    let vi = |v: VVec| vb.iter().position(|&x| x == v).expect("basis vector");

    let mut a: IntMatrix = vec![vec![BigInt::from(0); dim]; dim];
    for (c, &u) in ub.iter().enumerate() {
        match u {
            UVec::Odd(i, l) => {
                a[vi(VVec::X(i))][c] += 1;
                a[vi(VVec::Y(i, l))][c] -= 1;
            }
            UVec::Even(j) => a[vi(VVec::X(j + 1))][c] += 1,
            UVec::Top => a[vi(VVec::X(1))][c] += 1,
        }
    }
    let mut at: IntMatrix = vec![vec![BigInt::from(0); dim]; dim];
    for (c, &v) in vb.iter().enumerate() {
        match v {
            VVec::X(1) => at[ui(UVec::Top)][c] += 1,
            VVec::X(i) => at[ui(UVec::Even(i - 1))][c] += 1,
            VVec::Y(1, l) => {
                at[ui(UVec::Top)][c] += 1;
                at[ui(UVec::Odd(1, l))][c] -= 1;
            }
            VVec::Y(i, l) => {
                at[ui(UVec::Even(i - 1))][c] += 1;
                at[ui(UVec::Odd(i, l))][c] -= 1;
            }
        }
    }

    let mut failures = Vec::new();
    let det = det_int(&a);
    if det != BigInt::from(1) && det != BigInt::from(-1) {
        failures.push(format!("det φ = {det}"));
    }
    let phi_times_phi_tilde_is_identity = mul_int(&a, &at) == identity_int(dim);
    if !phi_times_phi_tilde_is_identity {
        failures.push("φ φ̃ is not the identity".into());
    }
    let psi = transpose(&at);
    let inv = inverse(&to_rational(&a));
    let psi_is_inverse_transpose = inv.as_ref().is_some_and(|m| transpose(m) == to_rational(&psi));
    if !psi_is_inverse_transpose {
        failures.push("ψ differs from the inverse transpose of φ".into());
    }

    // A linear hyperplane with normal α maps under ψ to the hyperplane with
    // normal (ψ^{−1})^T α.
    let psi_inv_t = inverse(&to_rational(&psi)).map(|m| transpose(&m));
    let unbounded = Limits {
        hyperplane_max: usize::MAX,
        ..Limits::default()
    };
    let target: BTreeSet<RationalHyperplane> = build_arrangement_nu(nu, &unbounded)?.into_iter().collect();
    let mut images = BTreeSet::new();
    let mut mapped = Vec::new();
    let zero = BigRational::from_integer(BigInt::from(0));
    for (c, &u) in ub.iter().enumerate() {
        let UVec::Odd(i, _) = u else { continue };
        for j in i..=n {
            let mut alpha = vec![zero.clone(); dim];
            alpha[c] = BigRational::from_integer(BigInt::from(1));
            alpha[ui(UVec::Even(j))] = BigRational::from_integer(BigInt::from(-1));
            let source = format!("{} - {} = 0", ub_label(u), ub_label(UVec::Even(j)));
            let Some(m) = &psi_inv_t else {
                failures.push("ψ is singular".into());
                break;
            };
            let image = RationalHyperplane::new(mul_vec_rat(m, &alpha), zero.clone())?;
            if !target.contains(&image) {
                failures.push(format!("{source} maps outside the arrangement"));
            }
            mapped.push((source, describe(&image, &vb)));
            images.insert(image);
        }
    }
    if images != target {
        failures.push(format!("{} images for {} hyperplanes", images.len(), target.len()));
    }

    Ok(CoordinateMapReport {
        u_labels: ub.iter().map(|&u| ub_label(u)).collect(),
        v_labels: vb.iter().map(|&v| vb_label(v)).collect(),
        phi: a,
        phi_tilde: at,
        psi,
        det,
        phi_times_phi_tilde_is_identity,
        psi_is_inverse_transpose,
        mapped,
        failures,
    })
}

fn ub_label(u: UVec) -> String {
    match u {
        UVec::Odd(i, l) => format!("u{}^({l})", 2 * i - 1),
        UVec::Even(j) => format!("u{}", 2 * j),
        UVec::Top => "u_top".into(),
    }
}

fn vb_label(v: VVec) -> String {
    match v {
        VVec::X(i) => format!("x{i}"),
        VVec::Y(i, l) => format!("y{i}^({l})"),
    }
}

fn describe(h: &RationalHyperplane, vb: &[VVec]) -> String {
    let mut s = String::new();
    for (c, &v) in h.normal().iter().zip(vb) {
        let z: BigRational = BigRational::from_integer(BigInt::from(0));
        if *c == z {
            continue;
        }
        let neg = *c < z;
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mag = if neg { -c.clone() } else { c.clone() };
        if mag != BigRational::from_integer(BigInt::from(1)) {
            s.push_str(&format!("{mag}*"));
        }
        s.push_str(&vb_label(v));
    }
    s.push_str(" = 0");
    s
}
