//! JSON encodings, unicode rendering and CSV tables.

use ferrochi_core::lattice::linalg::IntMatrix;
use ferrochi_core::lattice::RationalHyperplane;
use ferrochi_core::{Ring, SixVarPoly, TruncatedSeries, UniPoly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::CliResult;

/// An integer as an exact JSON number.
pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("decimal integer"))
}

pub fn ints<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(it.into_iter().map(int).collect())
}

pub fn uni(p: &UniPoly) -> Value {
    json!({ "var": "t", "coeffs": ints(&p.dense_coeffs()) })
}

pub fn sixvar(p: &SixVarPoly) -> Value {
    let vars: Vec<&str> = Var::ALL.iter().map(|v| v.name()).collect();
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exp": e.to_vec(), "coef": c.to_string() }))
        .collect();
    json!({ "vars": vars, "terms": terms })
}

pub fn series<R: Ring>(s: &TruncatedSeries<R>, enc: impl Fn(&R) -> Value) -> Value {
    let coeffs: Vec<Value> = s.coeffs().iter().map(enc).collect();
    json!({ "var": "u", "order": s.order(), "coeffs": coeffs })
}

/// `p/q` in lowest terms, with `q = 1` written out.
pub fn rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn hyperplane(h: &RationalHyperplane) -> Value {
    let normal: Vec<String> = h.normal().iter().map(rational).collect();
    json!({ "normal": normal, "offset": rational(h.offset()) })
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.iter().map(ints).collect())
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// Joins signed terms as `a − b + c`.
fn join_terms(terms: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('−'),
            (0, false) => {}
            (_, true) => out.push_str(" − "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coefficient_body(c: &BigInt, monomial: String) -> String {
    let mag = c.abs();
    if monomial.is_empty() {
        mag.to_string()
    } else if mag.is_one() {
        monomial
    } else {
        format!("{mag}{monomial}")
    }
}

/// `t³ − 3t² + 3t − 1`.
pub fn pretty_uni(p: &UniPoly) -> String {
    let mut terms: Vec<(u32, &BigInt)> = p.terms().collect();
    terms.reverse();
    join_terms(
        terms
            .into_iter()
            .map(|(e, c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => "t".into(),
                    _ => format!("t{}", superscript(e)),
                };
                (c.is_negative(), coefficient_body(c, mono))
            })
            .collect(),
    )
}

/// `xȳ + yz̄ + zx̄`.
pub fn pretty_sixvar(p: &SixVarPoly) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "x\u{304}", "y\u{304}", "z\u{304}"];
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| b.0.iter().sum::<u32>().cmp(&a.0.iter().sum::<u32>()).then_with(|| b.0.cmp(a.0)));
    join_terms(
        terms
            .into_iter()
            .map(|(e, c)| {
                let mono: String = e
                    .iter()
                    .zip(NAMES)
                    .filter(|(&x, _)| x > 0)
                    .map(|(&x, name)| if x == 1 { name.to_string() } else { format!("{name}{}", superscript(x)) })
                    .collect();
                (c.is_negative(), coefficient_body(c, mono))
            })
            .collect(),
    )
}

pub fn pretty_series<R: Ring>(s: &TruncatedSeries<R>, render: impl Fn(&R) -> String, zero: impl Fn(&R) -> bool) -> String {
    let mut out = String::new();
    for (j, c) in s.coeffs().iter().enumerate() {
        if zero(c) {
            continue;
        }
        out.push_str(&format!("u{}: {}\n", superscript(j as u32), render(c)));
    }
    out.push_str(&format!("+ O(u{})\n", superscript(s.order() as u32 + 1)));
    out
}

pub fn is_zero_uni(p: &UniPoly) -> bool {
    p.is_zero()
}

/// An RFC-4180 table with a header row.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

pub fn is_zero_int(n: &BigInt) -> bool {
    n.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_json() {
        let p = UniPoly::from_ints(&[-1, 3, -3, 1]);
        assert_eq!(uni(&p).to_string(), r#"{"var":"t","coeffs":[-1,3,-3,1]}"#);
        assert_eq!(uni(&UniPoly::zero()).to_string(), r#"{"var":"t","coeffs":[]}"#);
        let big = UniPoly::constant(BigInt::from(10).pow(30));
        assert_eq!(uni(&big).to_string(), r#"{"var":"t","coeffs":[1000000000000000000000000000000]}"#);
    }

    #[test]
    fn sixvar_json() {
        let p = SixVarPoly::var(Var::X) * SixVarPoly::var(Var::YBar) - SixVarPoly::var(Var::Z);
        assert_eq!(
            sixvar(&p).to_string(),
            r#"{"vars":["x","y","z","xb","yb","zb"],"terms":[{"exp":[0,0,1,0,0,0],"coef":"-1"},{"exp":[1,0,0,0,1,0],"coef":"1"}]}"#
        );
    }

    #[test]
    fn unicode_rendering() {
        assert_eq!(pretty_uni(&UniPoly::from_ints(&[-1, 3, -3, 1])), "t³ − 3t² + 3t − 1");
        assert_eq!(pretty_uni(&UniPoly::from_ints(&[0, -12])), "−12t");
        assert_eq!(pretty_uni(&UniPoly::zero()), "0");
        let p = SixVarPoly::var(Var::X) * SixVarPoly::var(Var::YBar) + SixVarPoly::var(Var::Z);
        assert_eq!(pretty_sixvar(&p), "xy\u{304} + z");
    }

    #[test]
    fn hyperplane_json() {
        let h = RationalHyperplane::from_ints(&[2, -1], 1).unwrap();
        assert_eq!(hyperplane(&h).to_string(), r#"{"normal":["1/1","-1/2"],"offset":"1/2"}"#);
    }

    #[test]
    fn csv_quoting() {
        let t = csv_table(&["n", "value"], &[vec!["1".into(), "t - 1".into()], vec!["2".into(), "a,b".into()]]).unwrap();
        assert_eq!(t, "n,value\n1,t - 1\n2,\"a,b\"\n");
    }
}
