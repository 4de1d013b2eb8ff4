//! Argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "kpz", version, about = "RSK, polymers and KPZ-class distributions: simulations, tables and checks")]
pub struct Cli {
    /// Seed for every random draw of the run.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for Monte Carlo and quadrature assembly.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output file, with the run manifest next to it as <OUT>.manifest.json.
    /// Without it the payload goes to stdout and the manifest to stderr.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// RSK of a nonnegative integer matrix.
    Rsk(RskArgs),
    /// Geometric RSK of a positive matrix.
    Grsk(GrskArgs),
    /// Law of geometric last passage time: Schur sum, Fredholm, Monte Carlo.
    LppDist(LppArgs),
    /// Laplace transform of the log-gamma polymer partition function.
    PolymerLaplace(LaplaceArgs),
    /// Tracy-Widom GUE distribution function.
    TwCdf(TwArgs),
    /// Airy function and derivative.
    Airy(AiryArgs),
    /// Continuous-time dynamics on Gelfand-Tsetlin patterns.
    Simulate(SimulateArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Rsk(_) => "rsk",
            Command::Grsk(_) => "grsk",
            Command::LppDist(_) => "lpp-dist",
            Command::PolymerLaplace(_) => "polymer-laplace",
            Command::TwCdf(_) => "tw-cdf",
            Command::Airy(_) => "airy",
            Command::Simulate(_) => "simulate",
            Command::Verify(_) => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RskBackend {
    Insertion,
    LocalMoves,
}

#[derive(Debug, Args, Serialize)]
pub struct RskArgs {
    /// `RxC-ones`, `RxC-zeros`, `perm:3,5,1` or rows like `1,0;2,1`.
    #[arg(long)]
    pub matrix: String,
    #[arg(long, value_enum, default_value_t = RskBackend::LocalMoves)]
    pub backend: RskBackend,
    /// Invert the output and report whether the input comes back.
    #[arg(long)]
    pub round_trip: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct GrskArgs {
    /// Rows of positive reals, like `1.5,2;0.3,1`, or `RxC-ones`.
    #[arg(long)]
    pub matrix: String,
    #[arg(long)]
    pub round_trip: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct LppArgs {
    /// Row parameters p_i in (0, 1), repeated.
    #[arg(long = "p", required = true)]
    pub p: Vec<f64>,
    /// Column parameters q_j in (0, 1), repeated.
    #[arg(long = "q", required = true)]
    pub q: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub u_min: i64,
    #[arg(long, default_value_t = 12)]
    pub u_max: i64,
    /// Quadrature nodes on each contour.
    #[arg(long, default_value_t = 64)]
    pub nodes: usize,
    /// Monte Carlo samples; 0 leaves the P_mc column empty.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct LaplaceArgs {
    /// Row parameters α_i, repeated; n = number of values (contour needs n ≤ 2).
    #[arg(long, required = true, allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    /// Column parameters β_j, repeated, same count as α.
    #[arg(long, required = true, allow_negative_numbers = true)]
    pub beta: Vec<f64>,
    /// Transform variables s ≥ 0, repeated.
    #[arg(long = "s", required = true)]
    pub s: Vec<f64>,
    /// Monte Carlo replicas; 0 skips the Monte Carlo columns.
    #[arg(long, default_value_t = 100_000)]
    pub replicas: usize,
    /// Real part of the vertical contour; chosen automatically when absent.
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = 1280)]
    pub nodes: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct TwArgs {
    #[arg(long = "x", required = true, allow_negative_numbers = true)]
    pub x: Vec<f64>,
    #[arg(long, default_value_t = 96)]
    pub nodes: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct AiryArgs {
    #[arg(long = "x", required = true, allow_negative_numbers = true)]
    pub x: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelArg {
    PoissonRsk,
    QRsk,
    QWhittaker,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub model: ModelArg,
    /// Jump rates x_1..x_n, repeated; n is the depth of the pattern.
    #[arg(long = "x", required = true)]
    pub x: Vec<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub q: f64,
    /// Time horizon.
    #[arg(long)]
    pub time: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_events: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fast,
    Full,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Mutation test hook: corrupts the RSK local move so the RSK checks
    /// must fail.
    #[arg(long, hide = true)]
    pub corrupt_local_move: bool,
    /// Run only these criteria (1-12); repeatable.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=12))]
    pub only: Vec<u8>,
}
