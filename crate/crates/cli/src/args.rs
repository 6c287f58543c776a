//! Command-line grammar and flag value parsers.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use equiangular::constructions::SrgParams;
use equiangular::{parse_rational, Rational};

#[derive(Debug, Parser)]
#[command(name = "equiangular", version, about = "Construct, validate and saturate equiangular line sets")]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a known configuration and write it as LineSet JSON.
    Construct(ConstructArgs),
    /// Check a LineSet JSON file.
    Validate {
        file: PathBuf,
    },
    /// Decide whether a line set is saturated.
    Saturate(SaturateArgs),
    /// Random span-closure search for large sub-configurations.
    Search(SearchArgs),
    /// Relative bound r(1 - a^2) / (1 - r a^2).
    Bound {
        r: usize,
        #[arg(value_parser = rational)]
        alpha: Rational,
    },
    /// Known lower and upper bounds on the number of equiangular lines.
    Info {
        d: usize,
    },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub which: Construction,
    /// Output file; stdout when absent.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Construction {
    /// 28 lines in dimension 14 at angle 1/5.
    Tremain14,
    /// The 759 octads of the Witt design, by lexicographic greedy search.
    Octads,
    /// 90 lines in dimension 20 at angle 1/5.
    Taylor90,
    /// 72 lines in dimension 19 at angle 1/5.
    Asche72,
    /// Lines from the Seidel matrix of a graph6 graph.
    FromGraph6 {
        file: PathBuf,
        #[arg(long, value_parser = rational)]
        angle: Rational,
        /// Expected strongly regular parameters `n,k,lambda,mu`.
        #[arg(long, value_parser = srg_params)]
        srg: Option<SrgParams>,
    },
}

#[derive(Debug, Args)]
pub struct SaturateArgs {
    pub file: PathBuf,
    /// Comma-separated 0-based line indices forming a basis.
    #[arg(long, value_parser = index_list)]
    pub basis: Option<IndexList>,
    /// Write the compatibility graph in DIMACS format.
    #[arg(long)]
    pub export_graph: Option<PathBuf>,
    /// Refuse when 2^(rank-1) sign patterns exceed this.
    #[arg(long, default_value_t = 1 << 24)]
    pub work_ceiling: u64,
    /// Run even above the work ceiling.
    #[arg(long)]
    pub force: bool,
    /// Stop the clique search after this many seconds (result is then a bound).
    #[arg(long)]
    pub time_limit: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub runs: u64,
    #[arg(long)]
    pub seed: u64,
    /// Write the best closure as LineSet JSON.
    #[arg(long)]
    pub emit_best: Option<PathBuf>,
    /// Write one row per run: run, seed, closure_size, rank_ok.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
}

/// Comma-separated list of 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexList(pub Vec<usize>);

pub fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `"0,2,4"` to `[0, 2, 4]`; whitespace around entries is allowed.
pub fn index_list(s: &str) -> Result<IndexList, String> {
    if s.trim().is_empty() {
        return Err("empty index list".into());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{}` is not an index", t.trim())))
        .collect::<Result<_, _>>()
        .map(IndexList)
}

pub fn srg_params(s: &str) -> Result<SrgParams, String> {
    match index_list(s)?.0.as_slice() {
        &[n, k, lambda, mu] => Ok(SrgParams { n, k, lambda, mu }),
        other => Err(format!("expected n,k,lambda,mu, got {} values", other.len())),
    }
}
