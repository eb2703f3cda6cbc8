//! Command-line front end for `ferrochi-core`: polynomial and series
//! calculators, CSV tables, and the `verify` cross-validation harness.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;

use args::{Cli, Command};
use commands::Outcome;
use error::CliResult;
use verify::{build_checks, run_checks, Bounds};

/// Parses `args`, runs the command, prints its output and returns the exit
/// code: 0 on success, 1 on usage errors, 2 when a verification fails.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.render(cli.pretty));
            if outcome.ok {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> CliResult<Outcome> {
    let limits = config::load_limits(cli.config.as_deref())?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(error::usage("--threads must be positive"));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    pool.install(|| match &cli.command {
        Command::Chi(a) => commands::chi(a, &limits),
        Command::Lambda(a) => commands::lambda(a, &limits),
        Command::Dperms(a) => commands::dperms(a, &limits),
        Command::Staircases(a) => commands::staircases(a, &limits),
        Command::Genfun(a) => commands::genfun(a, &limits),
        Command::Genocchi(a) => commands::genocchi(a, &limits),
        Command::Regions(a) => commands::regions(a, &limits),
        Command::Table(a) => commands::table(a, &limits),
        Command::Map(a) => commands::map(a),
        Command::Verify(a) => {
            let bounds = Bounds {
                max_n: a.max_n,
                max_k: a.max_k,
                max_m: a.max_m,
                max_evens: a.max_evens,
            };
            if bounds.max_n == 0 || bounds.max_k == 0 || bounds.max_m == 0 || bounds.max_evens == 0 {
                return Err(error::usage("verify bounds must be positive"));
            }
            let report = run_checks(a.suite, bounds, build_checks(a.suite, bounds), &limits, a.timings);
            let ok = report.passed();
            let json = serde_json::to_value(&report).expect("report serializes");
            Ok(Outcome {
                output: commands::Output::Structured {
                    json,
                    human: report.human(),
                },
                ok,
            })
        }
    })
}
