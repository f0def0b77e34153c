use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Sylvester,
    Modular,
}

#[derive(Debug, Parser)]
#[command(name = "berge", version, about = "Replay elimination chains and verify the finite-field constructions")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for the randomized oracles.
    #[arg(long, global = true, default_value_t = 20240521)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replay a built-in or user-supplied elimination chain.
    Replay(ReplayArgs),
    /// Build the hypergraph H over F_p.
    Construct(ConstructArgs),
    /// Build the graph G_q.
    ConstructGraph(GraphArgs),
    /// Run one of the exhaustive or sampled checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Compute one resultant.
    Resultant(ResultantArgs),
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    /// Built-in script name.
    #[arg(conflicts_with_all = ["all", "file"], required_unless_present_any = ["all", "file"])]
    pub name: Option<String>,
    /// Replay every built-in script.
    #[arg(long)]
    pub all: bool,
    /// Read the chain from this file.
    #[arg(long, conflicts_with = "all")]
    pub file: Option<PathBuf>,
    /// Random points per resultant spot check.
    #[arg(long, default_value_t = 50)]
    pub spot_trials: usize,
    /// Resultant algorithm.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Include per-step wall-clock times in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct PrimeArgs {
    /// Prime modulus.
    #[arg(long)]
    pub p: u64,
    /// Accept primes below 47.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub prime: PrimeArgs,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Odd prime.
    #[arg(long)]
    pub q: u64,
    /// Also list every edge.
    #[arg(long)]
    pub adjacency: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Count Berge 3-paths between every pair of vertices of H.
    Paths(PrimeArgs),
    /// Search H for (1,2,1,2)-type Berge 4-cycles.
    Cycles1212(PrimeArgs),
    /// Search G_q for a theta_{4,3}.
    Theta43 {
        #[arg(long)]
        q: u64,
    },
    /// Check the octagon identities on G_q.
    Octagon {
        #[arg(long)]
        q: u64,
        /// Octagons to examine (0 for all).
        #[arg(long, default_value_t = 1000)]
        samples: u64,
    },
}

#[derive(Debug, Args)]
pub struct ResultantArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    pub vars: String,
    /// Variable to eliminate.
    #[arg(long)]
    pub var: String,
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
}
