//! One line per acceptance criterion. Every comparison is exact equality of
//! integers or integer polynomials; there is no numeric tolerance.

use std::process::Command;
use std::time::{Duration, Instant};

use ferrochi::verify::parity_sets;
use ferrochi_core::dperm::{
    char_poly_via_dperms, chromatic_via_dperms, default_r, dowling_char_via_enumeration, qlabeled_counts_by_cycles,
    qlabeled_id_forest_counts,
};
use ferrochi_core::ferrers::canonical_set;
use ferrochi_core::genfun::{
    dowling_char_formula, genocchi_sign, gf_complete_bipartite, gf_dowling_complete_bipartite, gf_dowling_k_staircase,
    gf_genocchi, gf_k_staircase, gf_lambda_complete_bipartite, gf_lambda_fixed_step, gf_median_genocchi,
    median_genocchi_decomposition,
};
use ferrochi_core::lattice::{build_arrangement_nu, regions};
use ferrochi_core::routes::{chi_for_composition, Route};
use ferrochi_core::staircase::{dperm_specialization_holds, lambda_enum, lambda_rec, StaircaseSet};
use ferrochi_core::{Limits, PositiveIntSet, Result, UniPoly, WeakComposition};
use num_bigint::BigInt;
use num_traits::Zero;

struct Outcome {
    criterion: u32,
    name: &'static str,
    failures: Vec<String>,
    instances: usize,
    elapsed: Duration,
    budget: Duration,
}

fn criterion(criterion: u32, name: &'static str, budget_s: u64, body: impl FnOnce(&mut Tally) -> Result<()>) -> Outcome {
    let start = Instant::now();
    let mut tally = Tally::default();
    if let Err(e) = body(&mut tally) {
        tally.failures.push(format!("error: {e}"));
    }
    Outcome {
        criterion,
        name,
        failures: tally.failures,
        instances: tally.instances,
        elapsed: start.elapsed(),
        budget: Duration::from_secs(budget_s),
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn nu(parts: &[u32]) -> WeakComposition {
    WeakComposition::new(parts.iter().copied()).unwrap()
}

fn four_routes(t: &mut Tally) -> Result<()> {
    let lim = Limits::default();
    for parts in [&[1][..], &[2], &[1, 1], &[2, 1], &[1, 2], &[2, 2], &[1, 1, 1]] {
        let c = nu(parts);
        let base = chi_for_composition(&c, Route::DPerm, &lim)?;
        for r in [Route::Bond, Route::Arrangement, Route::GenFun] {
            let other = chi_for_composition(&c, r, &lim)?;
            t.check(other == base, || format!("ν={parts:?} {r}: {other} vs {base}"));
        }
    }
    Ok(())
}

fn lambda_consistency(t: &mut Tally) -> Result<()> {
    let lim = Limits::default();
    let mut zero_ell = 0;
    for v in parity_sets(4, 6) {
        let s = StaircaseSet::new(v)?;
        if s.ell_rec() == 0 {
            zero_ell += 1;
        }
        let (e, r) = (lambda_enum(&s, &lim)?, lambda_rec(&s));
        t.check(e == r, || format!("S={s}"));
    }
    t.check(zero_ell > 0, || "no instance with ℓ_rec = 0".into());
    Ok(())
}

fn dperm_specialization(t: &mut Tally) -> Result<()> {
    let lim = Limits::default();
    for mask in 1u32..64 {
        let v = PositiveIntSet::new((1..=6).filter(|i| mask & (1 << (i - 1)) != 0))?;
        if !v.has_even_max() {
            continue;
        }
        for k in 1..=3 {
            let ok = dperm_specialization_holds(&v, k, &lim)?;
            t.check(ok, || format!("V={v} k={k}"));
        }
    }
    Ok(())
}

fn generating_functions(t: &mut Tally) -> Result<()> {
    let lim = Limits::default();
    for k in 1..=4u32 {
        let top = 5 - k;
        let stair = gf_k_staircase(k, top as usize)?;
        let bip = gf_complete_bipartite(k, top as usize)?;
        let lam_s = gf_lambda_fixed_step(k, top as usize - 1, &lim)?;
        let lam_t = gf_lambda_complete_bipartite(k, top as usize - 1, &lim)?;
        for n in 1..=top {
            let s = StaircaseSet::fixed_step(n, k)?;
            let by_dperm = char_poly_via_dperms(s.set(), &lim)?;
            t.check(stair.coeff(n as usize) == &by_dperm, || format!("k-staircase n={n} k={k}"));

            let kb = canonical_set(&WeakComposition::leading(n as usize, k)?)?;
            let ch = chromatic_via_dperms(&kb, &lim)?;
            t.check(bip.coeff(n as usize) == &ch, || format!("complete bipartite n={n} k={k}"));

            let i = n as usize - 1;
            t.check(lam_s.coeff(i) == &lambda_enum(&s, &lim)?, || format!("Λ fixed step n={n} k={k}"));
            let tb = StaircaseSet::complete_bipartite(n, k)?;
            t.check(lam_t.coeff(i) == &lambda_enum(&tb, &lim)?, || format!("Λ complete bipartite n={n} k={k}"));
        }
    }
    let c4 = UniPoly::from_ints(&[0, -3, 6, -4, 1]);
    t.check(gf_complete_bipartite(2, 2)?.coeff(2) == &c4, || "ch(C_4)".into());
    Ok(())
}

fn dowling(t: &mut Tally) -> Result<()> {
    let lim = Limits::default();
    for parts in [&[1][..], &[1, 1], &[2], &[2, 1]] {
        let c = nu(parts);
        let v = canonical_set(&c)?;
        for q in 1..=3 {
            let formula = dowling_char_formula(&c, q)?;
            let labeled = dowling_char_via_enumeration(&c, q, &lim)?;
            t.check(formula == labeled, || format!("ν={parts:?} q={q}: {formula} vs {labeled}"));
            let r = default_r(&v);
            let perms = qlabeled_counts_by_cycles(&v, r, q, &lim)?;
            let forests = qlabeled_id_forest_counts(&v, r, q, &lim)?;
            t.check(perms == forests, || format!("ν={parts:?} q={q}: {perms:?} vs {forests:?}"));
        }
    }
    for k in 1..=3 {
        let plain = gf_k_staircase(k, 4)?;
        let bip = gf_complete_bipartite(k, 4)?;
        let dk = gf_dowling_k_staircase(k, 1, 3)?;
        let db = gf_dowling_complete_bipartite(k, 1, 3)?;
        for j in 0..=3 {
            t.check(dk.coeff(j) == plain.coeff(j + 1), || format!("k-staircase m=1 k={k} u^{j}"));
            let shifted = bip.coeff(j + 1).clone();
            let ok = shifted == db.coeff(j).shift_degree(1);
            t.check(ok, || format!("complete bipartite m=1 k={k} u^{j}"));
        }
    }
    Ok(())
}

fn genocchi(t: &mut Tally) -> Result<()> {
    let lim = Limits::default();
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let g = gf_genocchi(1, 4)?;
    t.check(g == ints(&[1, 1, 3, 17]), || format!("g_(n,1) = {g:?}"));
    let h = gf_median_genocchi(1, 3)?;
    t.check(h == ints(&[2, 8, 56]), || format!("h_(n,1) = {h:?}"));
    let h3 = regions(&build_arrangement_nu(&nu(&[1, 1]), &lim)?, &lim)?;
    t.check(h3 == h[1], || format!("regions of H_3 = {h3}"));

    for k in 1..=4u32 {
        let count = (5 - k) as usize;
        let chi = gf_k_staircase(k, count)?;
        let g = gf_genocchi(k, count)?;
        let h = gf_median_genocchi(k, count)?;
        for n in 1..=count as u32 {
            let c = chi.coeff(n as usize);
            let sign = genocchi_sign(n, k);
            t.check(&sign * c.eval(&BigInt::zero()) == g[n as usize - 1], || format!("g n={n} k={k}"));
            t.check(&sign * c.eval(&BigInt::from(-1)) == h[n as usize - 1], || format!("h n={n} k={k}"));
        }
    }
    for (n, k) in [(2, 1), (3, 1), (2, 2)] {
        let d = median_genocchi_decomposition(n, k, &lim)?;
        t.check(d.holds(), || format!("n={n} k={k}: {} vs {}", d.weighted_sum, d.expected));
    }
    Ok(())
}

fn determinism(t: &mut Tally) -> Result<()> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_ferrochi"))
            .args(["verify", "--suite", "all"])
            .output()
            .expect("spawn ferrochi")
    };
    let (a, b) = (run(), run());
    t.check(a.status.code() == Some(0), || format!("first run exited {:?}", a.status.code()));
    t.check(b.status.code() == Some(0), || format!("second run exited {:?}", b.status.code()));
    t.check(!a.stdout.is_empty() && a.stdout == b.stdout, || "reports differ".into());
    Ok(())
}

fn main() {
    let outcomes = [
        criterion(1, "four-route agreement on seven compositions", 120, four_routes),
        criterion(2, "lambda_enum = lambda_rec on parity sets with ≤ 4 evens, ≤ 6 odds", 120, lambda_consistency),
        criterion(3, "D-permutation specialization of Λ for V ⊆ [6], k ≤ 3", 60, dperm_specialization),
        criterion(4, "generating-function coefficients vs enumeration for n + k ≤ 5", 120, generating_functions),
        criterion(5, "Dowling formula, labeled forests and m = 1 reductions", 180, dowling),
        criterion(6, "Genocchi and median Genocchi values and identities", 120, genocchi),
        criterion(7, "two verify --suite all reports are byte-identical", 600, determinism),
    ];
    let mut all = true;
    for o in &outcomes {
        let in_time = o.elapsed <= o.budget;
        let pass = o.failures.is_empty() && in_time;
        all &= pass;
        println!(
            "{} criterion {}: {} [{} exact comparisons, {:.1}s of {}s]",
            if pass { "PASS" } else { "FAIL" },
            o.criterion,
            o.name,
            o.instances,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs()
        );
        for f in &o.failures {
            println!("    {f}");
        }
        if !in_time {
            println!("    over time budget");
        }
    }
    if !all {
        std::process::exit(1);
    }
}
