use ferrochi_core::dperm::{
    cycle_count_distribution, default_r, enumerate_dperms, enumerate_qlabeled_dperms, qlabeled_counts_by_cycles,
};
use ferrochi_core::ferrers::{composition_from_partition, v_from_partition};
use ferrochi_core::genfun::{
    dowling_char_formula, gf_complete_bipartite, gf_genocchi, gf_lambda_complete_bipartite, gf_lambda_fixed_step,
    gf_median_genocchi, median_genocchi_decomposition, Family, FamilySpec,
};
use ferrochi_core::lattice::{build_arrangement_nu, coordinate_map_nu, intersection_poset};
use ferrochi_core::routes::{chi_for_composition, chi_for_set, composition_of_set, genfun_source, GenFunSource, Route};
use ferrochi_core::staircase::{
    count_staircases, enumerate_staircases, lambda_enum, lambda_rec, render_diagram, staircase_stats, StaircaseSet,
};
use ferrochi_core::{Error, IntegerPartition, Limits, PositiveIntSet, UniPoly, WeakComposition};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{
    ChiArgs, DpermsArgs, GenfunArgs, GenocchiArgs, InputArgs, LambdaArgs, LambdaMethod, MapArgs, Method, NuFamily,
    RegionsArgs, SeriesFamily, StaircasesArgs, TableArgs, TableFamily,
};
use crate::error::{usage, CliResult};
use crate::output::{self, pretty_series, pretty_sixvar, pretty_uni};

pub enum Output {
    /// JSON plus a human rendering for `--pretty`.
    Structured { json: Value, human: String },
    /// CSV, printed as is in every mode.
    Csv(String),
}

pub struct Outcome {
    pub output: Output,
    /// `false` when a cross-check failed.
    pub ok: bool,
}

impl Outcome {
    fn ok(json: Value, human: String) -> Self {
        Outcome {
            output: Output::Structured { json, human },
            ok: true,
        }
    }

    pub fn render(&self, pretty: bool) -> String {
        match &self.output {
            Output::Structured { human, .. } if pretty => {
                let mut s = human.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Output::Structured { json, .. } => format!("{json}\n"),
            Output::Csv(text) => text.clone(),
        }
    }
}

enum Input {
    Set(PositiveIntSet),
    Nu(WeakComposition),
    Partition(IntegerPartition, PositiveIntSet),
}

impl Input {
    fn parse(args: &InputArgs) -> CliResult<Self> {
        if let Some(v) = &args.v {
            return Ok(Input::Set(PositiveIntSet::new(v.0.iter().copied())?));
        }
        if let Some(nu) = &args.nu {
            return Ok(Input::Nu(WeakComposition::new(nu.0.iter().copied())?));
        }
        let Some(p) = &args.partition else {
            return Err(usage("one of --v, --nu, --partition is required"));
        };
        let lambda = IntegerPartition::new(p.0.iter().copied())?;
        let v = v_from_partition(&lambda)?;
        Ok(Input::Partition(lambda, v))
    }

    fn json(&self) -> Value {
        match self {
            Input::Set(v) => json!({ "v": v.elements() }),
            Input::Nu(nu) => json!({ "nu": nu.parts() }),
            Input::Partition(l, v) => json!({ "partition": l.parts(), "v": v.elements() }),
        }
    }

    fn chi(&self, route: Route, limits: &Limits) -> ferrochi_core::Result<UniPoly> {
        match self {
            Input::Set(v) | Input::Partition(_, v) => chi_for_set(v, route, limits),
            Input::Nu(nu) => chi_for_composition(nu, route, limits),
        }
    }

    fn composition(&self) -> ferrochi_core::Result<WeakComposition> {
        match self {
            Input::Set(v) => composition_of_set(v),
            Input::Nu(nu) => Ok(nu.clone()),
            Input::Partition(l, _) => composition_from_partition(l),
        }
    }
}

fn route_of(m: Method) -> Route {
    match m {
        Method::Dperm => Route::DPerm,
        Method::Bond => Route::Bond,
        Method::Arrangement => Route::Arrangement,
        Method::Genfun => Route::GenFun,
        Method::Dowling => Route::Dowling,
    }
}

fn source_name(s: GenFunSource) -> String {
    match s {
        GenFunSource::KStaircase { n, k } => format!("k-staircase n={n} k={k}"),
        GenFunSource::CompleteBipartite { n, k } => format!("complete-bipartite n={n} k={k}"),
        GenFunSource::Lambda => "lambda formula q=1".into(),
    }
}

pub fn chi(args: &ChiArgs, limits: &Limits) -> CliResult<Outcome> {
    let input = Input::parse(&args.input)?;
    if !args.all_methods {
        if args.q != 1 && args.method != Method::Dowling {
            return Err(usage("--q only applies to --method dowling"));
        }
        let p = if args.method == Method::Dowling {
            dowling_char_formula(&input.composition()?, args.q)?
        } else {
            input.chi(route_of(args.method), limits)?
        };
        return Ok(Outcome::ok(output::uni(&p), pretty_uni(&p)));
    }
    let mut methods = Vec::new();
    let mut human = String::new();
    let mut found: Vec<UniPoly> = Vec::new();
    for route in [Route::DPerm, Route::Bond, Route::Arrangement, Route::GenFun] {
        match input.chi(route, limits) {
            Ok(p) => {
                let mut entry = json!({ "method": route.name(), "chi": output::uni(&p) });
                if route == Route::GenFun {
                    if let Ok(nu) = input.composition() {
                        entry["source"] = json!(source_name(genfun_source(&nu)));
                    }
                }
                human.push_str(&format!("{:<12} {}\n", route.name(), pretty_uni(&p)));
                methods.push(entry);
                found.push(p);
            }
            Err(e @ Error::Invariant(_)) => return Err(e.into()),
            Err(e) => {
                human.push_str(&format!("{:<12} skipped: {e}\n", route.name()));
                methods.push(json!({ "method": route.name(), "skipped": e.to_string() }));
            }
        }
    }
    let agree = found.len() >= 2 && found.windows(2).all(|w| w[0] == w[1]);
    let verdict = if agree { "agree" } else { "disagree" };
    human.push_str(&format!("verdict: {verdict}\n"));
    let chi = if agree { output::uni(&found[0]) } else { Value::Null };
    Ok(Outcome {
        output: Output::Structured {
            json: json!({ "input": input.json(), "methods": methods, "verdict": verdict, "chi": chi }),
            human,
        },
        ok: agree,
    })
}

pub fn lambda(args: &LambdaArgs, limits: &Limits) -> CliResult<Outcome> {
    let s = StaircaseSet::new(PositiveIntSet::new(args.s.0.iter().copied())?)?;
    match args.method {
        LambdaMethod::Rec => {
            let p = lambda_rec(&s);
            Ok(Outcome::ok(output::sixvar(&p), pretty_sixvar(&p)))
        }
        LambdaMethod::Enum => {
            let p = lambda_enum(&s, limits)?;
            Ok(Outcome::ok(output::sixvar(&p), pretty_sixvar(&p)))
        }
        LambdaMethod::Both => {
            let e = lambda_enum(&s, limits)?;
            let r = lambda_rec(&s);
            let agree = e == r;
            let human = format!(
                "enum {}\nrec  {}\nverdict: {}\n",
                pretty_sixvar(&e),
                pretty_sixvar(&r),
                if agree { "agree" } else { "disagree" }
            );
            Ok(Outcome {
                output: Output::Structured {
                    json: json!({ "enum": output::sixvar(&e), "rec": output::sixvar(&r), "agree": agree }),
                    human,
                },
                ok: agree,
            })
        }
    }
}

fn cycle_text(cycles: &[Vec<u32>], labels: Option<&[Vec<Option<u32>>]>) -> String {
    cycles
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let body: Vec<String> = c
                .iter()
                .enumerate()
                .map(|(j, a)| match labels.and_then(|l| l[i][j]) {
                    Some(lab) => format!("{a}^{lab}"),
                    None => a.to_string(),
                })
                .collect();
            format!("({})", body.join(" "))
        })
        .collect()
}

pub fn dperms(args: &DpermsArgs, limits: &Limits) -> CliResult<Outcome> {
    let v = PositiveIntSet::new(args.v.0.iter().copied())?;
    let Some(q) = args.q else {
        let by_cycles = cycle_count_distribution(&v, limits)?;
        let total: BigInt = by_cycles.iter().sum();
        let mut json = json!({ "v": v.elements(), "count": output::int(&total), "by_cycles": output::ints(&by_cycles) });
        let mut human = format!("{total} D-permutations of {v}\nby cycles: {:?}\n", by_cycles.iter().map(ToString::to_string).collect::<Vec<_>>());
        if !args.count_only {
            let all = enumerate_dperms(&v, limits)?;
            json["dperms"] = Value::Array(all.iter().map(|p| json!(p.cycles)).collect());
            for p in &all {
                human.push_str(&cycle_text(&p.cycles, None));
                human.push('\n');
            }
        }
        return Ok(Outcome::ok(json, human));
    };
    let r = args.r.unwrap_or_else(|| default_r(&v));
    let by_cycles = qlabeled_counts_by_cycles(&v, r, q, limits)?;
    let total: BigInt = by_cycles.iter().sum();
    let mut json = json!({
        "v": v.elements(),
        "q": q,
        "r": r,
        "count": output::int(&total),
        "by_cycles": output::ints(&by_cycles),
    });
    let mut human = format!("{total} {q}-labeled D-permutations of {v} in [{}]\n", 2 * r);
    if !args.count_only {
        let all = enumerate_qlabeled_dperms(&v, r, q, limits)?;
        json["dperms"] = Value::Array(
            all.iter()
                .map(|p| json!({ "cycles": p.perm.cycles, "labels": p.labels }))
                .collect(),
        );
        for p in &all {
            human.push_str(&cycle_text(&p.perm.cycles, Some(&p.labels)));
            human.push('\n');
        }
    }
    Ok(Outcome::ok(json, human))
}

pub fn staircases(args: &StaircasesArgs, limits: &Limits) -> CliResult<Outcome> {
    let s = StaircaseSet::new(PositiveIntSet::new(args.s.0.iter().copied())?)?;
    let count = count_staircases(&s, limits)?;
    let mut json = json!({ "s": s.elements(), "count": count });
    let mut human = format!("{count} staircases on {}\n", s.set());
    if !args.count_only {
        let all = enumerate_staircases(&s, limits)?;
        let mut list = Vec::new();
        for f in &all {
            let st = staircase_stats(&s, f);
            list.push(json!({
                "values": f.values,
                "stats": { "mo": st.mo, "fd": st.fd, "si": st.si, "me": st.me, "fi": st.fi, "sd": st.sd },
            }));
            human.push_str(&format!("\nF = {:?}  weight {}\n", f.values, pretty_sixvar(&st.weight())));
            human.push_str(&render_diagram(&s, f));
        }
        json["staircases"] = Value::Array(list);
    }
    Ok(Outcome::ok(json, human))
}

fn core_family(f: SeriesFamily) -> Option<Family> {
    match f {
        SeriesFamily::KStaircase => Some(Family::KStaircase),
        SeriesFamily::KStaircaseChromatic => Some(Family::KStaircaseChromatic),
        SeriesFamily::CompleteBipartite => Some(Family::CompleteBipartite),
        SeriesFamily::DowlingKStaircase => Some(Family::DowlingKStaircase),
        SeriesFamily::DowlingCompleteBipartite => Some(Family::DowlingCompleteBipartite),
        SeriesFamily::LambdaFixedStep | SeriesFamily::LambdaCompleteBipartite => None,
    }
}

pub fn genfun(args: &GenfunArgs, limits: &Limits) -> CliResult<Outcome> {
    let at = if args.t0 { Some(0) } else { args.t };
    let Some(family) = core_family(args.family) else {
        if at.is_some() {
            return Err(usage("--t0 and --t apply to the polynomial families only"));
        }
        let s = match args.family {
            SeriesFamily::LambdaFixedStep => gf_lambda_fixed_step(args.k, args.order, limits)?,
            _ => gf_lambda_complete_bipartite(args.k, args.order, limits)?,
        };
        let human = pretty_series(&s, pretty_sixvar, |p| p.is_empty());
        return Ok(Outcome::ok(output::series(&s, output::sixvar), human));
    };
    let spec = FamilySpec {
        family,
        k: args.k,
        m: args.m,
        order: args.order,
    };
    let s = spec.series()?;
    match at {
        None => {
            let human = pretty_series(&s, pretty_uni, output::is_zero_uni);
            Ok(Outcome::ok(output::series(&s, output::uni), human))
        }
        Some(t) => {
            let t = BigInt::from(t);
            let values = s.map(|p| p.eval(&t));
            let mut json = output::series(&values, output::int);
            json["t"] = output::int(&t);
            let human = pretty_series(&values, ToString::to_string, output::is_zero_int);
            Ok(Outcome::ok(json, human))
        }
    }
}

pub fn genocchi(args: &GenocchiArgs, limits: &Limits) -> CliResult<Outcome> {
    if args.decompose {
        let mut list = Vec::new();
        let mut human = String::new();
        let mut ok = true;
        for n in 1..=args.n as u32 {
            let d = median_genocchi_decomposition(n, args.k, limits)?;
            ok &= d.holds();
            let counts: Vec<Value> = d.counts.iter().map(|(j, c)| json!({ "j": j, "count": c })).collect();
            human.push_str(&format!("h_{{{n},{}}} = {} =", args.k, d.expected));
            for (j, c) in &d.counts {
                human.push_str(&format!(" + {c}·2^{}", *j as u32 + args.k));
            }
            human.push_str(&format!(" ({})\n", if d.holds() { "holds" } else { "fails" }));
            list.push(json!({
                "n": n,
                "k": args.k,
                "counts": counts,
                "weighted_sum": output::int(&d.weighted_sum),
                "expected": output::int(&d.expected),
                "holds": d.holds(),
            }));
        }
        return Ok(Outcome {
            output: Output::Structured {
                json: Value::Array(list),
                human,
            },
            ok,
        });
    }
    let values = if args.median {
        gf_median_genocchi(args.k, args.n)?
    } else {
        gf_genocchi(args.k, args.n)?
    };
    csv_values(values.iter().map(ToString::to_string))
}

fn csv_values(values: impl Iterator<Item = String>) -> CliResult<Outcome> {
    let rows: Vec<Vec<String>> = values.enumerate().map(|(i, v)| vec![(i + 1).to_string(), v]).collect();
    Ok(Outcome {
        output: Output::Csv(output::csv_table(&["n", "value"], &rows)?),
        ok: true,
    })
}

pub fn regions(args: &RegionsArgs, limits: &Limits) -> CliResult<Outcome> {
    let input = Input::parse(&args.input)?;
    let nu = input.composition()?;
    let hs = build_arrangement_nu(&nu, limits)?;
    let poset = intersection_poset(&hs, limits)?;
    let chi = poset.char_poly();
    let rank = poset.length();
    let value = chi.eval(&BigInt::from(-1));
    let count = if rank % 2 == 0 { value } else { -value };
    let mut json = json!({
        "nu": nu.parts(),
        "dimension": hs.first().map_or(0, |h| h.dim()),
        "hyperplane_count": hs.len(),
        "rank": rank,
        "chi": output::uni(&chi),
        "regions": output::int(&count),
    });
    let mut human = format!(
        "ν = {:?}: {} hyperplanes, χ = {}, {count} regions\n",
        nu.parts(),
        hs.len(),
        pretty_uni(&chi)
    );
    if args.hyperplanes {
        json["hyperplanes"] = Value::Array(hs.iter().map(output::hyperplane).collect());
        for h in &hs {
            human.push_str(&format!("  {h}\n"));
        }
    }
    Ok(Outcome::ok(json, human))
}

pub fn table(args: &TableArgs, limits: &Limits) -> CliResult<Outcome> {
    let n_max = args.max_n;
    let family = match args.nu_family {
        NuFamily::KStaircase => Family::KStaircase,
        NuFamily::CompleteBipartite => Family::CompleteBipartite,
    };
    let values: Vec<String> = match args.family {
        TableFamily::Regions => (1..=n_max)
            .map(|n| {
                let nu = family.composition(n, args.k)?;
                ferrochi_core::lattice::regions(&build_arrangement_nu(&nu, limits)?, limits).map(|r| r.to_string())
            })
            .collect::<Result<_, _>>()?,
        TableFamily::Chi => (1..=n_max)
            .map(|n| {
                let nu = family.composition(n, args.k)?;
                chi_for_composition(&nu, Route::GenFun, limits).map(|p| p.to_string())
            })
            .collect::<Result<_, _>>()?,
        TableFamily::ChromaticBipartite => {
            let s = gf_complete_bipartite(args.k, n_max)?;
            (1..=n_max).map(|n| s.coeff(n).to_string()).collect()
        }
        TableFamily::Genocchi => gf_genocchi(args.k, n_max)?.iter().map(ToString::to_string).collect(),
        TableFamily::MedianGenocchi => gf_median_genocchi(args.k, n_max)?.iter().map(ToString::to_string).collect(),
    };
    csv_values(values.into_iter())
}

pub fn map(args: &MapArgs) -> CliResult<Outcome> {
    let nu = WeakComposition::new(args.nu.0.iter().copied())?;
    let r = coordinate_map_nu(&nu)?;
    let mapped: Vec<Value> = r
        .mapped
        .iter()
        .map(|(g, h)| json!({ "graphic": g, "image": h }))
        .collect();
    let json = json!({
        "nu": nu.parts(),
        "u_labels": r.u_labels,
        "v_labels": r.v_labels,
        "phi": output::matrix(&r.phi),
        "phi_tilde": output::matrix(&r.phi_tilde),
        "psi": output::matrix(&r.psi),
        "det": output::int(&r.det),
        "phi_times_phi_tilde_is_identity": r.phi_times_phi_tilde_is_identity,
        "psi_is_inverse_transpose": r.psi_is_inverse_transpose,
        "mapped": mapped,
        "failures": r.failures,
        "holds": r.holds(),
    });
    let mut human = format!("det φ = {}\n", r.det);
    for (g, h) in &r.mapped {
        human.push_str(&format!("{g}  ↦  {h}\n"));
    }
    for f in &r.failures {
        human.push_str(&format!("failure: {f}\n"));
    }
    Ok(Outcome {
        output: Output::Structured { json, human },
        ok: r.holds(),
    })
}

