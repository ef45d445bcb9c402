//! Command-line front end for the girthlab toolkit.
//!
//! Every subcommand writes one document to stdout (or `--output`), starting
//! with the resolved configuration. Failures print a single JSON line on
//! stderr and exit with 2 for bad inputs, 3 for numerical breakdown.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "girthlab", version, about = "Random independent sets in cubic graphs of large girth")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Iterate the tree recurrence to the white threshold.
    Solve(SolveArgs),
    /// Sample a random cubic graph, optionally boosting its girth.
    Generate(GenerateArgs),
    /// Girth and odd girth of a graph.
    Girth(GirthArgs),
    /// Run the colouring procedure and report per-round aggregates.
    Simulate(SimulateArgs),
    /// Per-vertex coverage of the red set and the fractional bound.
    Coverage(CoverageArgs),
    /// Two-factor construction for graphs of large odd girth.
    Oddgirth(OddGirthArgs),
    /// Cut from an independent set, with optional exact oracles.
    Maxcut(MaxCutArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    F32,
    F64,
    /// Double-double arithmetic.
    Dd,
}

/// Where the graph comes from: an edge-list file or a catalog name.
#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Catalog graph (k4, prism, k33, cube, petersen, heawood, pappus, mcgee, tutte_coxeter).
    #[arg(long)]
    pub named: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Output {
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Workers {
    /// Worker threads for trials (default: one per core).
    #[arg(long, env = "GIRTHLAB_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SolveArgs {
    #[arg(long)]
    pub p1: f64,
    #[arg(long)]
    pub p2: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub threshold: f64,
    #[arg(long, default_value_t = 10_000_000)]
    pub max_rounds: usize,
    /// Emit every `stride`-th round of the trace (the first and last are always kept).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub stride: u64,
    #[arg(long, value_enum, default_value_t = Precision::F64)]
    pub precision: Precision,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub seed: u64,
    /// Boost the girth to at least this value with double-edge swaps.
    #[arg(long)]
    pub target_girth: Option<usize>,
    #[arg(long, default_value_t = 10_000_000)]
    pub max_steps: usize,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GirthArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    /// Include witness cycles.
    #[arg(long)]
    pub witness: bool,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProcedureArgs {
    #[arg(long)]
    pub p1: f64,
    #[arg(long)]
    pub p2: f64,
    /// Total number of rounds, including the first.
    #[arg(long)]
    pub rounds: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[command(flatten)]
    pub procedure: ProcedureArgs,
    #[arg(long)]
    pub seed: u64,
    /// Independent runs, pooled per round; trial `i` uses seed + i.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Include the final red set (single trial only).
    #[arg(long)]
    pub red_set: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    #[serde(flatten)]
    pub workers: Workers,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CoverageArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    #[command(flatten)]
    pub procedure: ProcedureArgs,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    /// Include the per-vertex frequencies.
    #[arg(long)]
    pub per_vertex: bool,
    #[command(flatten)]
    #[serde(flatten)]
    pub workers: Workers,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OddGirthArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    /// Odd girth parameter g (odd, at least 5).
    #[arg(long = "g")]
    pub g_odd: usize,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub per_vertex: bool,
    #[command(flatten)]
    #[serde(flatten)]
    pub workers: Workers,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MaxCutArgs {
    #[command(flatten)]
    pub graph: GraphSource,
    /// Comma-separated independent set; when absent one is sampled with the procedure.
    #[arg(long, value_delimiter = ',')]
    pub set: Option<Vec<usize>>,
    #[arg(long)]
    pub p1: Option<f64>,
    #[arg(long)]
    pub p2: Option<f64>,
    #[arg(long)]
    pub rounds: Option<usize>,
    /// Required when the set is sampled.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Also compute the exact independence number and maximum cut.
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    #[serde(skip)]
    pub out: Output,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return CliError::usage(e.to_string()).report(),
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(),
    }
}
