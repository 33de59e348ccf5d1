//! `antsys`: solve, benchmark, verify and generate symmetric TSP instances.
//!
//! Exit status: 0 on success, 1 for usage errors, 2 for runtime or data errors.

mod bench;
mod exact;
mod gen;
mod solve;

use std::process::ExitCode;

use antsys_core::Error;
use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "antsys",
    version,
    about = "Ant colony solvers for the symmetric TSP"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one solver on one instance.
    Solve(solve::SolveArgs),
    /// Seeded multi-run comparison; writes summary.csv and runs.csv.
    Bench(bench::BenchArgs),
    /// Exact optimum of a small instance (n <= 18).
    Exact(exact::ExactArgs),
    /// Write a random EUC_2D instance in TSPLIB format.
    Gen(gen::GenArgs),
}

/// Why a command failed, which decides the exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConfig(_) | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

pub type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => solve::run(args),
        Command::Bench(args) => bench::run(args),
        Command::Exact(args) => exact::run(args),
        Command::Gen(args) => gen::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
