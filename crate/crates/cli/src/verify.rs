//! The cross-validation orchestrator. Every check compares two independent
//! computations; checks run on the rayon pool and the report keeps their
//! construction order.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use ferrochi_core::dperm::{
    char_poly_via_dperms, chromatic_via_dperms, default_r, dowling_char_via_enumeration, qlabeled_counts_by_cycles,
    qlabeled_id_forest_counts,
};
use ferrochi_core::ferrers::{
    canonical_set, composition_from_partition, ferrers_isomorphic, gamma_graph, graph_from_composition,
    partition_type, v_from_partition,
};
use ferrochi_core::genfun::{
    dowling_char_formula, even_fixed_point_form, genocchi_sign, gf_complete_bipartite, gf_dowling_complete_bipartite,
    gf_dowling_k_staircase, gf_genocchi, gf_k_staircase, gf_lambda_complete_bipartite, gf_lambda_fixed_step,
    gf_median_genocchi, median_genocchi_decomposition,
};
use ferrochi_core::graph::SimpleGraph;
use ferrochi_core::lattice::{
    bond_char_poly, bond_lattice, build_arrangement_nu, coordinate_map_nu, intersection_poset, regions,
};
use ferrochi_core::staircase::{count_staircases, lambda_enum, lambda_rec, dperm_specialization_sides, verify_top_row_bijection};
use ferrochi_core::staircase::StaircaseSet;
use ferrochi_core::{IntegerPartition, Limits, PositiveIntSet, Result, UniPoly, WeakComposition};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_n: u32,
    pub max_k: u32,
    pub max_m: u32,
    pub max_evens: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 3,
            max_k: 2,
            max_m: 2,
            max_evens: 3,
        }
    }
}

/// Expected and actual values of one comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Comparison {
    pub fn eq<T: PartialEq + Display>(expected: &T, actual: &T) -> Self {
        Comparison {
            pass: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn holds(pass: bool, detail: impl Into<String>) -> Self {
        Comparison {
            pass,
            expected: "true".into(),
            actual: if pass { "true".into() } else { detail.into() },
        }
    }
}

type Runner = Box<dyn Fn(&Limits) -> Result<Comparison> + Send + Sync>;

pub struct Check {
    pub id: &'static str,
    pub params: Value,
    run: Runner,
}

impl Check {
    pub fn new(
        id: &'static str,
        params: Value,
        run: impl Fn(&Limits) -> Result<Comparison> + Send + Sync + 'static,
    ) -> Self {
        Check {
            id,
            params,
            run: Box::new(run),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub params: Value,
    pub status: &'static str,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub bounds: Bounds,
    pub status: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<5} {:<28} {}", c.status.to_uppercase(), c.id, c.params));
            if c.status != "pass" {
                out.push_str(&format!("\n      expected {}\n      actual   {}", c.expected, c.actual));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed\n",
            self.status.to_uppercase(),
            self.passed,
            self.failed
        ));
        out
    }
}

fn shorten(s: String) -> String {
    const MAX: usize = 160;
    if s.chars().count() <= MAX {
        return s;
    }
    let head: String = s.chars().take(MAX).collect();
    format!("{head}… ({} chars)", s.chars().count())
}

pub fn run_checks(suite: Suite, bounds: Bounds, checks: Vec<Check>, limits: &Limits, timings: bool) -> VerificationReport {
    let results: Vec<CheckResult> = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)(limits);
            let elapsed_ms = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
            let (status, expected, actual) = match outcome {
                Ok(cmp) if cmp.pass => ("pass", shorten(cmp.expected), shorten(cmp.actual)),
                Ok(cmp) => ("fail", cmp.expected, cmp.actual),
                Err(e) => ("fail", "a result".into(), format!("error: {e}")),
            };
            CheckResult {
                id: c.id,
                params: c.params.clone(),
                status,
                expected,
                actual,
                elapsed_ms,
            }
        })
        .collect();
    let failed = results.iter().filter(|r| r.status != "pass").count();
    VerificationReport {
        suite: suite_name(suite),
        bounds,
        status: if failed == 0 { "pass" } else { "fail" },
        passed: results.len() - failed,
        failed,
        checks: results,
    }
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Ferrers => "ferrers",
        Suite::Dperm => "dperm",
        Suite::Lambda => "lambda",
        Suite::Lattice => "lattice",
        Suite::Genfun => "genfun",
        Suite::Genocchi => "genocchi",
        Suite::Dowling => "dowling",
        Suite::All => "all",
    }
}

pub fn build_checks(suite: Suite, b: Bounds) -> Vec<Check> {
    match suite {
        Suite::Ferrers => ferrers_checks(b),
        Suite::Dperm => dperm_checks(b),
        Suite::Lambda => lambda_checks(b),
        Suite::Lattice => lattice_checks(b),
        Suite::Genfun => genfun_checks(b),
        Suite::Genocchi => genocchi_checks(b),
        Suite::Dowling => dowling_checks(b),
        Suite::All => [
            Suite::Ferrers,
            Suite::Dperm,
            Suite::Lambda,
            Suite::Lattice,
            Suite::Genfun,
            Suite::Genocchi,
            Suite::Dowling,
        ]
        .into_iter()
        .flat_map(|s| build_checks(s, b))
        .collect(),
    }
}

/// Compositions with `1..=max_n` entries, each at most `max_part`, and a
/// positive first entry.
pub fn compositions(max_n: u32, max_part: u32) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let base = max_part + 1;
        for code in 0..base.pow(n) {
            let parts: Vec<u32> = (0..n).map(|i| code / base.pow(i) % base).collect();
            if parts[0] > 0 {
                out.push(WeakComposition::new(parts).expect("positive first entry"));
            }
        }
    }
    out
}

/// Staircase sets up to relabeling: every parity word ending in an even
/// entry, realized with the smallest integers.
pub fn parity_sets(max_evens: u32, max_odds: u32) -> Vec<PositiveIntSet> {
    fn go(evens: u32, odds: u32, word: &mut Vec<bool>, out: &mut Vec<PositiveIntSet>, me: u32, mo: u32) {
        if word.last() == Some(&true) {
            let mut last = 0;
            let elems: Vec<u32> = word
                .iter()
                .map(|&even| {
                    last += if (last % 2 == 0) == even { 2 } else { 1 };
                    last
                })
                .collect();
            out.push(PositiveIntSet::new(elems).expect("positive"));
        }
        if evens < me {
            word.push(true);
            go(evens + 1, odds, word, out, me, mo);
            word.pop();
        }
        if odds < mo {
            word.push(false);
            go(evens, odds + 1, word, out, me, mo);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, &mut Vec::new(), &mut out, max_evens, max_odds);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn subsets_with_even_max(n: u32) -> Vec<PositiveIntSet> {
    (1u32..1 << n)
        .map(|mask| PositiveIntSet::new((1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).expect("positive"))
        .filter(PositiveIntSet::has_even_max)
        .collect()
}

fn partitions_in_box(parts: u32, size: u32) -> Vec<IntegerPartition> {
    fn go(max: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if !cur.is_empty() {
            out.push(IntegerPartition::new(cur.clone()).expect("positive parts"));
        }
        if left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            go(p, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, parts, &mut Vec::new(), &mut out);
    out
}

fn nu_json(nu: &WeakComposition) -> Value {
    json!({ "nu": nu.parts() })
}

fn set_json(v: &PositiveIntSet) -> Value {
    json!({ "v": v.elements() })
}

fn gamma_chi(v: &PositiveIntSet, limits: &Limits) -> Result<UniPoly> {
    bond_char_poly(&gamma_graph(v).to_simple()?, limits)
}

fn complete_bipartite(n: usize, k: usize) -> Result<SimpleGraph> {
    let edges: Vec<_> = (0..n).flat_map(|i| (0..k).map(move |j| (i, n + j))).collect();
    SimpleGraph::from_edges(n + k, &edges)
}

fn ferrers_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for lambda in partitions_in_box(b.max_n + 1, b.max_k + 2) {
        out.push(Check::new(
            "ferrers.round-trip",
            json!({ "partition": lambda.parts() }),
            move |_| {
                let v = v_from_partition(&lambda)?;
                let back = partition_type(&v)?;
                let nu = composition_from_partition(&lambda)?;
                let ok = back == lambda && nu.partition()? == lambda;
                Ok(Comparison {
                    pass: ok,
                    expected: format!("{lambda}"),
                    actual: format!("{back} via {v}"),
                })
            },
        ));
    }
    for nu in compositions(b.max_n, b.max_k) {
        out.push(Check::new("ferrers.composition-graph", nu_json(&nu), move |_| {
            let (lambda, g) = graph_from_composition(&nu)?;
            let gamma = gamma_graph(&canonical_set(&nu)?);
            let iso = g.to_simple()?.is_isomorphic(&gamma.to_simple()?);
            let ok = iso && g.is_ferrers() && g.row_degree_partition() == lambda;
            Ok(Comparison::holds(ok, format!("isomorphic={iso} ferrers={}", g.is_ferrers())))
        }));
    }
    let evens = b.max_evens;
    out.push(Check::new(
        "ferrers.isomorphism-type",
        json!({ "max_evens": evens }),
        move |_| {
            let sets: Vec<_> = parity_sets(evens, evens + 1)
                .into_iter()
                .filter(|s| s.elements()[0] % 2 == 1)
                .collect();
            let graphs: Vec<_> = sets.iter().map(|s| gamma_graph(s).to_simple()).collect::<Result<_>>()?;
            let types: Vec<_> = sets.iter().map(partition_type).collect::<Result<_>>()?;
            let mut bad = Vec::new();
            for i in 0..sets.len() {
                for j in i + 1..sets.len() {
                    let same_size = graphs[i].vertex_count() == graphs[j].vertex_count()
                        && graphs[i].edge_count() == graphs[j].edge_count();
                    let iso = same_size && graphs[i].is_isomorphic(&graphs[j]);
                    if iso != ferrers_isomorphic(&types[i], &types[j]) {
                        bad.push(format!("{} {}", sets[i], sets[j]));
                    }
                }
            }
            Ok(Comparison::holds(bad.is_empty(), bad.join("; ")))
        },
    ));
    out
}

fn dperm_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for nu in compositions(b.max_n, b.max_k) {
        let v = canonical_set(&nu).expect("positive first entry");
        let (v1, v2) = (v.clone(), v.clone());
        out.push(Check::new("dperm.chi-vs-bond", set_json(&v), move |l| {
            Ok(Comparison::eq(&gamma_chi(&v1, l)?, &char_poly_via_dperms(&v1, l)?))
        }));
        out.push(Check::new("dperm.chromatic", set_json(&v), move |l| {
            let chi = char_poly_via_dperms(&v2, l)?;
            Ok(Comparison::eq(&chi.shift_degree(1), &chromatic_via_dperms(&v2, l)?))
        }));
    }
    for v in subsets_with_even_max(6) {
        for q in 1..=b.max_m + 1 {
            let v = v.clone();
            out.push(Check::new(
                "dperm.labeled-vs-forests",
                json!({ "v": v.elements(), "q": q }),
                move |l| {
                    let r = default_r(&v);
                    let forests = qlabeled_id_forest_counts(&v, r, q, l)?;
                    let perms = qlabeled_counts_by_cycles(&v, r, q, l)?;
                    Ok(Comparison::eq(&format!("{forests:?}"), &format!("{perms:?}")))
                },
            ));
        }
    }
    out
}

fn lambda_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for v in parity_sets(b.max_evens, b.max_evens + 2) {
        let s = StaircaseSet::new(v.clone()).expect("even maximum");
        let params = json!({ "s": v.elements(), "ell_rec": s.ell_rec() });
        let s2 = s.clone();
        out.push(Check::new("lambda.rec-vs-enum", params, move |l| {
            Ok(Comparison::eq(&lambda_enum(&s, l)?, &lambda_rec(&s)))
        }));
        out.push(Check::new("lambda.count", set_json(&v), move |l| {
            let n = BigInt::from(count_staircases(&s2, l)?);
            Ok(Comparison::eq(&n, &lambda_rec(&s2).eval_ones()))
        }));
        if v.len() >= 2 && v.len() <= 7 {
            let s = StaircaseSet::new(v.clone()).expect("even maximum");
            if s.prime().is_some() {
                out.push(Check::new("lambda.top-row-bijection", set_json(&v), move |l| {
                    let r = verify_top_row_bijection(&s, l)?;
                    Ok(Comparison::holds(r.holds(), format!("{r:?}")))
                }));
            }
        }
    }
    for v in subsets_with_even_max(2 * b.max_evens) {
        for k in 1..=b.max_k {
            let v = v.clone();
            out.push(Check::new(
                "lambda.dperm-specialization",
                json!({ "v": v.elements(), "k": k }),
                move |l| {
                    let (lhs, rhs) = dperm_specialization_sides(&v, k, l)?;
                    Ok(Comparison::eq(&lhs, &rhs))
                },
            ));
        }
    }
    out
}

fn lattice_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for nu in compositions(b.max_n, b.max_k) {
        let nu2 = nu.clone();
        let nu3 = nu.clone();
        out.push(Check::new("lattice.arrangement-vs-bond", nu_json(&nu), move |l| {
            let (_, g) = graph_from_composition(&nu)?;
            let bond = bond_char_poly(&g.to_simple()?, l)?;
            let poset = intersection_poset(&build_arrangement_nu(&nu, l)?, l)?;
            Ok(Comparison::eq(&bond, &poset.char_poly()))
        }));
        out.push(Check::new("lattice.regions", nu_json(&nu2), move |l| {
            let v = canonical_set(&nu2)?;
            let chi = char_poly_via_dperms(&v, l)?;
            let value = chi.eval(&BigInt::from(-1));
            let expected = if (v.len() - 1) % 2 == 0 { value } else { -value };
            Ok(Comparison::eq(&expected, &regions(&build_arrangement_nu(&nu2, l)?, l)?))
        }));
        out.push(Check::new("lattice.coordinate-map", nu_json(&nu3), move |_| {
            let r = coordinate_map_nu(&nu3)?;
            Ok(Comparison::holds(r.holds(), r.failures.join("; ")))
        }));
    }
    for n in 2..=b.max_n + 2 {
        out.push(Check::new("lattice.mobius-identity", json!({ "complete_graph": n }), move |l| {
            let edges: Vec<_> = (0..n as usize).flat_map(|i| (i + 1..n as usize).map(move |j| (i, j))).collect();
            let p = bond_lattice(&SimpleGraph::from_edges(n as usize, &edges)?, l)?;
            Ok(Comparison::holds(p.check_mobius_identity(), "identity fails"))
        }));
    }
    out
}

fn genfun_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=b.max_k {
        for n in 1..=b.max_n {
            let p = json!({ "n": n, "k": k });
            out.push(Check::new("genfun.k-staircase", p.clone(), move |l| {
                let s = StaircaseSet::fixed_step(n, k)?;
                let series = gf_k_staircase(k, n as usize)?;
                Ok(Comparison::eq(&char_poly_via_dperms(s.set(), l)?, series.coeff(n as usize)))
            }));
            out.push(Check::new("genfun.complete-bipartite", p.clone(), move |l| {
                let bond = bond_char_poly(&complete_bipartite(n as usize, k as usize)?, l)?;
                let series = gf_complete_bipartite(k, n as usize)?;
                Ok(Comparison::eq(&bond.shift_degree(1), series.coeff(n as usize)))
            }));
            if (n as usize) <= Limits::default().lambda_series_max_order + 1 && n * (k + 1) <= 10 {
                out.push(Check::new("genfun.lambda-fixed-step", p.clone(), move |l| {
                    let s = StaircaseSet::fixed_step(n, k)?;
                    let series = gf_lambda_fixed_step(k, n as usize - 1, l)?;
                    Ok(Comparison::eq(&lambda_enum(&s, l)?, series.coeff(n as usize - 1)))
                }));
                out.push(Check::new("genfun.lambda-complete-bipartite", p, move |l| {
                    let s = StaircaseSet::complete_bipartite(n, k)?;
                    let series = gf_lambda_complete_bipartite(k, n as usize - 1, l)?;
                    Ok(Comparison::eq(&lambda_enum(&s, l)?, series.coeff(n as usize - 1)))
                }));
            }
        }
    }
    out.push(Check::new("genfun.four-cycle", json!({ "n": 2, "k": 2 }), |_| {
        let c4 = UniPoly::from_ints(&[0, -3, 6, -4, 1]);
        Ok(Comparison::eq(&c4, gf_complete_bipartite(2, 2)?.coeff(2)))
    }));
    out
}

fn genocchi_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(Check::new("genocchi.g-values", json!({ "k": 1 }), |_| {
        let expected: Vec<BigInt> = [1, 1, 3, 17].into_iter().map(BigInt::from).collect();
        Ok(Comparison::eq(&format!("{expected:?}"), &format!("{:?}", gf_genocchi(1, 4)?)))
    }));
    out.push(Check::new("genocchi.h-values", json!({ "k": 1 }), |_| {
        let expected: Vec<BigInt> = [2, 8, 56].into_iter().map(BigInt::from).collect();
        Ok(Comparison::eq(&format!("{expected:?}"), &format!("{:?}", gf_median_genocchi(1, 3)?)))
    }));
    for n in 2..=b.max_n.min(3) {
        out.push(Check::new("genocchi.h-as-regions", json!({ "n": n, "k": 1 }), move |l| {
            let nu = WeakComposition::constant(n as usize, 1)?;
            let r = regions(&build_arrangement_nu(&nu, l)?, l)?;
            Ok(Comparison::eq(&r, &gf_median_genocchi(1, n as usize)?[n as usize - 1]))
        }));
    }
    for k in 1..=b.max_k {
        let count = (b.max_n + 1) as usize;
        out.push(Check::new("genocchi.g-from-chi", json!({ "k": k, "n_max": count }), move |_| {
            let chi = gf_k_staircase(k, count)?;
            let from_chi: Vec<BigInt> = (1..=count as u32)
                .map(|n| genocchi_sign(n, k) * chi.coeff(n as usize).eval(&BigInt::from(0)))
                .collect();
            Ok(Comparison::eq(&format!("{from_chi:?}"), &format!("{:?}", gf_genocchi(k, count)?)))
        }));
        out.push(Check::new("genocchi.h-from-chi", json!({ "k": k, "n_max": count }), move |_| {
            let chi = gf_k_staircase(k, count)?;
            let from_chi: Vec<BigInt> = (1..=count as u32)
                .map(|n| genocchi_sign(n, k) * chi.coeff(n as usize).eval(&BigInt::from(-1)))
                .collect();
            Ok(Comparison::eq(&format!("{from_chi:?}"), &format!("{:?}", gf_median_genocchi(k, count)?)))
        }));
        for n in 1..=b.max_n {
            let p = json!({ "n": n, "k": k });
            out.push(Check::new("genocchi.power-of-two", p.clone(), move |l| {
                let d = median_genocchi_decomposition(n, k, l)?;
                let table: BTreeMap<_, _> = d.counts.iter().collect();
                Ok(Comparison {
                    pass: d.holds(),
                    expected: d.expected.to_string(),
                    actual: format!("{} from {table:?}", d.weighted_sum),
                })
            }));
            out.push(Check::new("genocchi.even-fixed-points", p, move |l| {
                let chi = gf_k_staircase(k, n as usize)?;
                Ok(Comparison::eq(chi.coeff(n as usize), &even_fixed_point_form(n, k, l)?))
            }));
        }
    }
    out
}

fn dowling_checks(b: Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for nu in compositions(b.max_n, b.max_k) {
        let size = canonical_set(&nu).map(|v| v.len()).unwrap_or(usize::MAX);
        if size > 8 {
            continue;
        }
        for q in 1..=b.max_m + 1 {
            let nu = nu.clone();
            out.push(Check::new(
                "dowling.formula-vs-labeled",
                json!({ "nu": nu.parts(), "q": q }),
                move |l| {
                    Ok(Comparison::eq(
                        &dowling_char_via_enumeration(&nu, q, l)?,
                        &dowling_char_formula(&nu, q)?,
                    ))
                },
            ));
        }
    }
    for k in 1..=b.max_k {
        out.push(Check::new("dowling.k-staircase-at-m-1", json!({ "k": k, "order": 4 }), move |_| {
            let d = gf_dowling_k_staircase(k, 1, 4)?;
            let s = gf_k_staircase(k, 5)?;
            let shifted = ferrochi_core::TruncatedSeries::from_coeffs(s.coeffs()[1..].iter().cloned(), 4);
            Ok(Comparison::eq(&format!("{:?}", shifted.coeffs()), &format!("{:?}", d.coeffs())))
        }));
        out.push(Check::new(
            "dowling.complete-bipartite-at-m-1",
            json!({ "k": k, "order": 4 }),
            move |_| {
                let d = gf_dowling_complete_bipartite(k, 1, 4)?;
                let s = gf_complete_bipartite(k, 5)?;
                let t = UniPoly::var();
                let mut shifted = Vec::new();
                for c in &s.coeffs()[1..] {
                    let (quot, _) = c.div_rem(&t).expect("monic divisor");
                    shifted.push(quot);
                }
                Ok(Comparison::eq(&format!("{shifted:?}"), &format!("{:?}", d.coeffs())))
            },
        ));
        for m in 1..=b.max_m {
            for n in 1..=b.max_n {
                if n * (k + 1) > 8 {
                    continue;
                }
                let p = json!({ "n": n, "k": k, "m": m });
                out.push(Check::new("dowling.k-staircase-series", p.clone(), move |l| {
                    let nu = WeakComposition::constant(n as usize, k)?;
                    let series = gf_dowling_k_staircase(k, m, n as usize - 1)?;
                    Ok(Comparison::eq(&dowling_char_via_enumeration(&nu, m, l)?, series.coeff(n as usize - 1)))
                }));
                if n + k <= 8 {
                    out.push(Check::new("dowling.complete-bipartite-series", p, move |l| {
                        let nu = WeakComposition::leading(n as usize, k)?;
                        let series = gf_dowling_complete_bipartite(k, m, n as usize - 1)?;
                        Ok(Comparison::eq(&dowling_char_via_enumeration(&nu, m, l)?, series.coeff(n as usize - 1)))
                    }));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_set_counts() {
        // Words with e evens and o odds ending in an even entry: C(e−1+o, o).
        let sets = parity_sets(4, 6);
        assert_eq!(sets.len(), 7 + 28 + 84 + 210);
        assert!(sets.iter().all(|s| s.has_even_max()));
        assert_eq!(parity_sets(1, 1).len(), 2);
        assert_eq!(parity_sets(1, 1)[1], PositiveIntSet::new([1, 2]).unwrap());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 2).len(), 2 + 6);
        assert!(compositions(3, 1).iter().all(|c| c.parts()[0] == 1));
    }

    #[test]
    fn failed_check_is_reported() {
        let checks = vec![
            Check::new("ok", json!({}), |_| Ok(Comparison::eq(&1, &1))),
            Check::new("bad", json!({}), |_| Ok(Comparison::eq(&1, &2))),
        ];
        let r = run_checks(Suite::All, Bounds::default(), checks, &Limits::default(), false);
        assert!(!r.passed());
        assert_eq!((r.passed, r.failed), (1, 1));
        assert_eq!(r.checks[1].actual, "2");
    }
}
