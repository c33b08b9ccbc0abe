use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "trestle", version, about = "k-trestles in squares of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the square of the input graph.
    Square(Io),
    /// List centres of induced S(K_{1,k}) with witnesses.
    Centres {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Decide whether the square of a tree has a k-trestle.
    Decide {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        k: usize,
    },
    /// Build and verify a k-trestle of the square.
    Build {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        k: usize,
        /// Write the square with trestle edges in bold as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a certificate produced by `build` against the input graph.
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Explain why the square of a tree has no 3-trestle.
    Obstruction {
        #[command(flatten)]
        io: Io,
        /// Write the tree with the witness highlighted as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Derive the base obstruction patterns by exhaustive enumeration.
    DerivePatterns {
        #[arg(long, default_value_t = 23)]
        max_n: usize,
        #[command(flatten)]
        search: Search,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List obstruction family members up to a given order.
    GenFamily {
        #[arg(long)]
        max_n: usize,
        /// Base patterns as written by `derive-patterns`; derived afresh
        /// when absent.
        #[arg(long)]
        patterns: Option<PathBuf>,
        #[command(flatten)]
        search: Search,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check decision, construction and exhaustive search on all
    /// trees up to a given order.
    Validate {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        k: usize,
        /// Worker threads; results are merged in enumeration order.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        search: Search,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct Io {
    /// Input file; standard input when absent.
    pub input: Option<PathBuf>,
    /// Input format; detected from the content when absent.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct Search {
    /// Node limit for exhaustive searches.
    #[arg(long, default_value_t = 50_000_000)]
    pub budget_nodes: u64,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}
