use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use triortho::weight::DEFAULT_BUDGET;

/// Tri-orthogonal qudit codes: construction, verification, simulation and
/// overhead search.
#[derive(Debug, Parser)]
#[command(name = "triortho", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write its JSON descriptor.
    Construct {
        #[command(flatten)]
        source: CodeSource,
        #[command(flatten)]
        out: Output,
    },
    /// Check every claim in a JSON descriptor.
    Verify {
        /// Descriptor written by `construct`.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Simulate the transversal third-level gate on every logical basis state.
    Simulate {
        #[command(flatten)]
        source: CodeSource,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Overhead exponent log(n/k)/log(d).
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Best overhead exponents over primes up to a bound.
    Search {
        #[arg(long, default_value_t = 100)]
        p_max: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Run the acceptance suite.
    Selftest {
        /// Criteria to run (default: all).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
    },
}

/// Where a code comes from: Reed-Solomon parameters, the searched qutrit
/// code, or a matrix file.
#[derive(Debug, Args)]
pub struct CodeSource {
    #[arg(long, required_unless_present_any = ["qutrit", "from_matrix", "input"])]
    pub p: Option<u64>,
    #[arg(long, required_unless_present_any = ["qutrit", "from_matrix", "input"])]
    pub l: Option<usize>,
    #[arg(long, required_unless_present_any = ["qutrit", "from_matrix", "input"])]
    pub k: Option<usize>,
    /// Puncture positions, comma-separated (default 0..k).
    #[arg(long, value_delimiter = ',')]
    pub puncture: Option<Vec<usize>>,
    /// The smallest searched qutrit code with one logical qudit.
    #[arg(long, conflicts_with_all = ["p", "l", "k", "from_matrix"])]
    pub qutrit: bool,
    /// A tri-orthogonal matrix in text format (`p nrows ncols` header).
    #[arg(long, conflicts_with_all = ["p", "l", "k"])]
    pub from_matrix: Option<PathBuf>,
    /// A JSON descriptor (`simulate` only).
    #[arg(long, conflicts_with_all = ["p", "l", "k", "qutrit", "from_matrix"])]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub const MIN_BUDGET: u64 = 10_000;

fn parse_budget(s: &str) -> Result<u64, String> {
    let b: u64 = s.parse().map_err(|e| format!("{e}"))?;
    if b < MIN_BUDGET {
        return Err(format!("budget must be at least {MIN_BUDGET}"));
    }
    Ok(b)
}
