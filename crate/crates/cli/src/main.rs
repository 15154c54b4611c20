//! `sigdom`: compute invariants, certify bounds and sweep graph classes.
//!
//! Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
//! 1 when a bound is violated, 2 on bad input.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "sigdom", version, about = "Signed total domination: exact values and bound certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants with witnesses.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Invariants: gamma_st, gamma_t, gamma_<k>t, rho_o, L_<k>, L_<k>t.
        #[arg(long = "inv", value_delimiter = ',', default_value = "gamma_st")]
        invariants: Vec<String>,
    },
    /// Evaluate every bound against the exact values.
    Certify {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Certify every graph of a class.
    Sweep(SweepArgs),
    /// Support structure of a tree, its bound, and the equality-family verdict.
    TreeOmega {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Args)]
pub(crate) struct GraphInput {
    /// Named graph: P<n>, C<n>, K<n>, S<k>, K<a>,<b>,..., heawood, petersen.
    #[arg(conflicts_with_all = ["g6", "edges"])]
    family: Option<String>,
    /// Graph in graph6 format.
    #[arg(long, conflicts_with = "edges")]
    g6: Option<String>,
    /// Edge-list file: "n m" then one "u v" per line.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum ClassArg {
    Trees,
    Cubic,
    Connected,
    Corpus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Json,
    Csv,
}

#[derive(Args)]
pub(crate) struct SweepArgs {
    /// Graph class; implied by --corpus.
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    /// Corpus file with one graph6 string per line.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Vertex range `a..b` (inclusive) or a single order.
    #[arg(long)]
    n: Option<String>,
    /// Comma-separated bound ids, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Seed for the random STDFs checked against the partition inequalities.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random STDFs per graph for the partition inequalities.
    #[arg(long, default_value_t = 8)]
    samples: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute { input, invariants } => commands::compute(&input, &invariants),
        Command::Certify { input } => commands::certify(&input),
        Command::Sweep(args) => commands::sweep(&args),
        Command::TreeOmega { input } => commands::tree_omega(&input),
    };
    match outcome {
        Ok(commands::Status::Clean) => ExitCode::SUCCESS,
        Ok(commands::Status::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sigdom: {e}");
            ExitCode::from(2)
        }
    }
}
