//! `cdgraph`: build, inspect and verify character-degree graphs.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or I/O errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "cdgraph", version)]
#[command(about = "Character-degree graphs: construction, exact invariants and perfection checks")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Psl2,
    Sn,
    Ingested,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the character graph of a degree-set file.
    Build {
        #[arg(long)]
        degrees: PathBuf,
        /// Write the graph as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the graph as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },

    /// Generate the character graph of PSL2(q).
    Psl2 {
        #[arg(long)]
        q: u128,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },

    /// Degrees of S_n by the hook length formula, and their graph.
    Sn {
        #[arg(long)]
        n: usize,
        /// Write the degree set as JSON.
        #[arg(long)]
        degrees_out: Option<PathBuf>,
        /// Write the graph as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },

    /// Compare the product degree set's graph with the join formula.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Print ω, χ, α, χ of the complement and the perfection verdict.
    Stats { file: PathBuf },

    /// Run verification checks; all of them when none is selected.
    Check {
        file: PathBuf,
        #[arg(long)]
        theorem_a: bool,
        #[arg(long)]
        corollary_b: bool,
        #[arg(long)]
        palfy: bool,
        #[arg(long)]
        moreto_tiep: bool,
    },

    /// Find or validate an arithmetic certificate for a cycle of the complement.
    CertifyCycle {
        file: PathBuf,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',', required = true)]
        pi: Vec<u128>,
        #[arg(long, requires = "alpha")]
        u: Option<u128>,
        #[arg(long, requires = "u")]
        alpha: Option<u32>,
    },

    /// Verify a whole family, one summary record per instance.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 4)]
        q_min: u128,
        #[arg(long)]
        q_max: Option<u128>,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Also run the three-prime condition.
        #[arg(long)]
        palfy: bool,
        /// Worker threads; defaults to CDGRAPH_JOBS, then to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match commands::run(cli.command, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
