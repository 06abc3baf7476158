//! `md`: metric dimension and Saving Landmarks from the command line.
//!
//! Exit status: 0 for yes / success, 1 for no, 2 for usage, input or
//! format errors.

mod bench;
mod commands;
mod report;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "md",
    version,
    about = "Metric dimension and Saving Landmarks toolkit"
)]
struct Cli {
    /// Emit the report as a single JSON object.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized solvers and random graph populations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for parallel solvers (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Append wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact metric dimension with a minimum resolving set.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = EngineArg::Bb)]
        engine: EngineArg,
    },
    /// Check whether a vertex set resolves the graph.
    Check {
        graph: PathBuf,
        /// Vertex ids, e.g. `0,3,5`.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// List twin classes.
    Twins { graph: PathBuf },
    /// Shrink every twin class to at most two vertices.
    Prune {
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Saving Landmarks: is there a resolving set of size at most n - k?
    #[command(subcommand)]
    Saving(SavingCommand),
    /// Build the Metric Dimension instance for a hitting-set file.
    Reduce {
        hitting_set: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Cross-checks against exact oracles.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Timing tables.
    Bench {
        #[arg(value_enum)]
        suite: bench::Suite,
    },
}

#[derive(Debug, Subcommand)]
enum SavingCommand {
    Solve {
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Exact)]
        method: MethodArg,
        /// Randomized trials (default 4^k).
        #[arg(long)]
        trials: Option<u64>,
        graph: PathBuf,
    },
    /// Polynomial kernel: a reduced instance or a trivial yes with certificate.
    Kernel {
        #[arg(short)]
        k: usize,
        graph: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Compare the hitting-set answer with the metric dimension answer.
    Reduction { hitting_set: PathBuf },
    /// Kernel and derandomized solver against the exact oracle.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_k: usize,
        /// Random graphs per size for n = 6, 7.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write the artifact here and print a report instead.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Bb,
    Naive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Randomized,
    Derandomized,
}

/// What a command produced: yes/success or no.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match commands::run(&cli) {
        Ok((status, output)) => {
            print!(
                "{}",
                output.render(cli.json, cli.timing.then(|| start.elapsed()))
            );
            ExitCode::from(match status {
                Status::Yes => 0,
                Status::No => 1,
            })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
