//! `pifrac`: generate π Fraction tables, check them, and run GA experiments.

mod commands;
mod literature;
mod manifest;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pifrac_core::bbp::BbpError;
use pifrac_core::gasr::ChildRanking;
use pifrac_core::TableError;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OTHER: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FILE: u8 = 3;
const EXIT_ACCURACY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "pifrac",
    version,
    about = "π Fraction tables, diagnostics and GA runs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print hexadecimal digits of π starting at a position.
    Digits {
        /// 1-based hex position after the point.
        #[arg(long, default_value_t = 1)]
        position: u64,
        #[arg(long, default_value_t = 24)]
        count: usize,
    },
    /// Build a fraction table and write it to a file.
    Gen {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        /// Hex digits per fraction window.
        #[arg(long, default_value_t = 24)]
        window: usize,
        /// Hex position of the first window.
        #[arg(long, default_value_t = 1)]
        start: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the binned PDF/CDF report of a table.
    Stats {
        #[command(flatten)]
        table: TableArg,
        #[arg(long, default_value_t = 1000)]
        bins: usize,
        #[arg(long)]
        out: PathBuf,
        /// Stamp the report with the current time.
        #[arg(long)]
        timestamp: bool,
    },
    /// Sample a point matrix and write one pair of coordinates.
    Scatter(ScatterArgs),
    /// Run the GA on one function.
    Gasr(GasrArgs),
    /// Run the six-function suite and tabulate against published values.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
pub struct TableArg {
    /// Fraction table file; defaults to an in-memory 10,000-fraction build.
    #[arg(long)]
    table_file: Option<PathBuf>,
}

#[derive(Args)]
pub struct ScatterArgs {
    /// pifrac, halton, vdc or prng.
    #[arg(long, default_value = "pifrac")]
    source: String,
    #[arg(long, default_value_t = 30)]
    dims: usize,
    #[arg(long, default_value_t = 1000)]
    points: usize,
    /// Index step between draws.
    #[arg(long, default_value_t = 1)]
    increment: usize,
    #[arg(long, default_value_t = 27)]
    dim_a: usize,
    #[arg(long, default_value_t = 28)]
    dim_b: usize,
    #[arg(long, default_value_t = 1)]
    start_index: usize,
    /// Derive the start index from the time of day.
    #[arg(long)]
    clock_start: bool,
    /// Seed for the prng source.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Base for the vdc source.
    #[arg(long, default_value_t = 2)]
    base: u64,
    #[command(flatten)]
    table: TableArg,
    /// Also write a gnuplot script to this path.
    #[arg(long)]
    plot_script: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
pub struct GasrArgs {
    #[arg(long)]
    function: String,
    /// Defaults to the function's fixed dimensionality, else 10.
    #[arg(long)]
    dims: Option<usize>,
    #[arg(long, default_value_t = 2500)]
    population: usize,
    #[arg(long, default_value_t = 100)]
    generations: usize,
    #[command(flatten)]
    table: TableArg,
    #[arg(long, default_value_t = 0)]
    index_offset: u64,
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    /// Index offset added per repeat.
    #[arg(long, default_value_t = 1000)]
    offset_stride: u64,
    #[arg(long, default_value_t = 0.8)]
    crossover_probability: f64,
    #[arg(long, default_value_t = 0.02)]
    mutation_probability: f64,
    #[arg(long, default_value_t = 0.5)]
    w: f64,
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Use [-10, 10] for Rastrigin.
    #[arg(long)]
    wide_rastrigin: bool,
    /// Shift Griewank by 100 in every coordinate.
    #[arg(long)]
    griewank_shift: bool,
    #[arg(long)]
    no_early_termination: bool,
    #[arg(long, value_enum, default_value_t = RankingArg::Fitness)]
    child_ranking: RankingArg,
    /// Output directory for run reports and the summary.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    dims: usize,
    #[arg(long, default_value_t = 200)]
    population: usize,
    #[arg(long, default_value_t = 100)]
    generations: usize,
    #[command(flatten)]
    table: TableArg,
    #[arg(long, default_value_t = 0)]
    index_offset: u64,
    #[arg(long, value_enum, default_value_t = RankingArg::Fitness)]
    child_ranking: RankingArg,
    #[arg(long)]
    out: PathBuf,
}

/// Which two of the four crossover children survive.
#[derive(Clone, Copy, ValueEnum)]
pub enum RankingArg {
    /// The two fittest children.
    Fitness,
    /// The original program's carried tag array.
    CarriedTags,
}

impl From<RankingArg> for ChildRanking {
    fn from(r: RankingArg) -> Self {
        match r {
            RankingArg::Fitness => ChildRanking::Fitness,
            RankingArg::CarriedTags => ChildRanking::CarriedTags,
        }
    }
}

impl std::fmt::Display for RankingArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RankingArg::Fitness => "fitness",
            RankingArg::CarriedTags => "carried-tags",
        })
    }
}

/// A bad flag combination or value that clap cannot catch.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<UsageError>() {
            return EXIT_USAGE;
        }
        if let Some(e) = cause.downcast_ref::<BbpError>() {
            return bbp_code(e);
        }
        if let Some(e) = cause.downcast_ref::<TableError>() {
            return match e {
                TableError::Extraction(b) => bbp_code(b),
                TableError::Empty | TableError::ZeroWindow => EXIT_USAGE,
                _ => EXIT_FILE,
            };
        }
        if cause.is::<std::io::Error>() {
            return EXIT_FILE;
        }
    }
    EXIT_OTHER
}

fn bbp_code(e: &BbpError) -> u8 {
    match e {
        BbpError::Ambiguous { .. } | BbpError::PrecisionExhausted { .. } => EXIT_ACCURACY,
        BbpError::InvalidPosition(_) | BbpError::OffsetTooLarge(_) => EXIT_USAGE,
        _ => EXIT_OTHER,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Digits { position, count } => commands::digits(position, count),
        Command::Gen {
            count,
            window,
            start,
            out,
        } => commands::gen(count, window, start, &out),
        Command::Stats {
            table,
            bins,
            out,
            timestamp,
        } => commands::stats(&table, bins, &out, timestamp),
        Command::Scatter(args) => commands::scatter(&args),
        Command::Gasr(args) => commands::gasr(&args),
        Command::Bench(args) => commands::bench(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
