use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// A comma-separated list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct List(pub Vec<u32>);

pub fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(List)
}

#[derive(Debug, Parser)]
#[command(name = "ferrochi", version, about = "Exact characteristic polynomials of Ferrers graphs and ν-arrangements")]
pub struct Cli {
    /// Machine-readable JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Human-readable output with unicode polynomials.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// TOML file overriding the enumeration bounds.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Worker threads for `verify`.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomial along one route or all of them.
    Chi(ChiArgs),
    /// The six-variable staircase polynomial Λ_S.
    Lambda(LambdaArgs),
    /// D-permutations of a set, optionally q-labeled.
    Dperms(DpermsArgs),
    /// Generalized surjective staircases of a set.
    Staircases(StaircasesArgs),
    /// Truncated generating functions.
    Genfun(GenfunArgs),
    /// Generalized Genocchi and median Genocchi numbers as CSV.
    Genocchi(GenocchiArgs),
    /// Region count of the arrangement H_ν.
    Regions(RegionsArgs),
    /// CSV tables over a family.
    Table(TableArgs),
    /// Run the cross-validation suites.
    Verify(VerifyArgs),
    /// Coordinate change from the graphic arrangement of G_ν to H_ν.
    Map(MapArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Vertex set V, ascending.
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub v: Option<List>,
    /// Weak composition ν; zeros allowed after the first entry.
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub nu: Option<List>,
    /// Partition λ, any order.
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub partition: Option<List>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dperm,
    Bond,
    Arrangement,
    Genfun,
    Dowling,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "dperm")]
    pub method: Method,
    /// Run every applicable route and compare.
    #[arg(long, conflicts_with = "method")]
    pub all_methods: bool,
    /// Dowling order for `--method dowling`.
    #[arg(long, default_value_t = 1)]
    pub q: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LambdaMethod {
    Enum,
    Rec,
    Both,
}

#[derive(Debug, Args)]
pub struct LambdaArgs {
    /// Staircase set S with an even maximum.
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub s: List,
    #[arg(long, value_enum, default_value = "rec")]
    pub method: LambdaMethod,
}

#[derive(Debug, Args)]
pub struct DpermsArgs {
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub v: List,
    /// Label alphabet size.
    #[arg(long)]
    pub q: Option<u32>,
    /// Ambient bound 2r ≥ max V; defaults to ⌈max V / 2⌉.
    #[arg(long, requires = "q")]
    pub r: Option<u32>,
    /// Only report counts by cycle number.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Args)]
pub struct StaircasesArgs {
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub s: List,
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFamily {
    KStaircase,
    KStaircaseChromatic,
    CompleteBipartite,
    DowlingKStaircase,
    DowlingCompleteBipartite,
    LambdaFixedStep,
    LambdaCompleteBipartite,
}

#[derive(Debug, Args)]
pub struct GenfunArgs {
    #[arg(long, value_enum)]
    pub family: SeriesFamily,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Dowling order.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Highest power of u kept.
    #[arg(long)]
    pub order: usize,
    /// Evaluate every coefficient at t = 0.
    #[arg(long, conflicts_with = "t")]
    pub t0: bool,
    /// Evaluate every coefficient at this t.
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<i64>,
}

#[derive(Debug, Args)]
pub struct GenocchiArgs {
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Number of terms.
    #[arg(long)]
    pub n: usize,
    /// Median Genocchi numbers h instead of g.
    #[arg(long)]
    pub median: bool,
    /// Power-of-two decomposition of h_{n,k} from D-permutations, as JSON.
    #[arg(long, conflicts_with = "median")]
    pub decompose: bool,
}

#[derive(Debug, Args)]
pub struct RegionsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Include the hyperplanes.
    #[arg(long)]
    pub hyperplanes: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    Regions,
    Chi,
    ChromaticBipartite,
    Genocchi,
    MedianGenocchi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NuFamily {
    KStaircase,
    CompleteBipartite,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: TableFamily,
    /// Composition family for `regions` and `chi`.
    #[arg(long, value_enum, default_value = "k-staircase")]
    pub nu_family: NuFamily,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Ferrers,
    Dperm,
    Lambda,
    Lattice,
    Genfun,
    Genocchi,
    Dowling,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 3)]
    pub max_n: u32,
    #[arg(long, default_value_t = 2)]
    pub max_k: u32,
    #[arg(long, default_value_t = 2)]
    pub max_m: u32,
    #[arg(long, default_value_t = 3)]
    pub max_evens: u32,
    /// Record per-check wall-clock times (makes the report nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long, value_parser = parse_list, value_name = "LIST")]
    pub nu: List,
}
