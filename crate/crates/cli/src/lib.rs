//! Command-line front end for `fockpoly`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 budget exceeded.

pub mod commands;
pub mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use output::{Format, OutputDocument};

#[derive(Debug, Parser)]
#[command(
    name = "fockpoly",
    version,
    about = "Cauchy polynomials, symmetric functions and exact matrix invariants"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Seed for randomized verification and benchmark inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the k-th Cauchy polynomial j_k (or k_k with --plus).
    Jpoly {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Use the complementary operator x1 + delta.
        #[arg(long)]
        plus: bool,
        /// Build from the partition formula instead of iterating the operator.
        #[arg(long)]
        closed: bool,
        /// Build both ways and report whether they agree.
        #[arg(long)]
        check: bool,
    },
    /// Tabulate conjugacy-class sizes of S_n by cycle type.
    Classes {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Cross-check every size against brute-force enumeration (n <= 8).
        #[arg(long)]
        verify: bool,
    },
    /// Power traces and prodeterminants of a matrix file.
    Invariants {
        file: PathBuf,
        /// Algorithms to run.
        #[arg(long, value_delimiter = ',', default_values = ["minors", "leverrier", "cauchy", "antisym"])]
        methods: Vec<String>,
    },
    /// Convert power sums s_1..s_k to c_k or w_k.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Power-sum values s_1 .. s_k, as integers or fractions like -7/2.
        #[arg(required = true, allow_hyphen_values = true)]
        values: Vec<String>,
    },
    /// Time each prodeterminant algorithm on seeded random matrices.
    Bench {
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Work limit (k! * n^k) above which the antisymmetrized sum is skipped.
        #[arg(long, default_value_t = fockpoly::invariants::ANTISYM_BUDGET)]
        antisym_budget: u64,
    },
    /// Run the cross-oracle verification suite.
    Verify {
        /// Run every check (the default when no --check is given).
        #[arg(long)]
        all: bool,
        /// Run only the named check; repeatable.
        #[arg(long = "check")]
        checks: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_k: u32,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Elementary,
    Wronski,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerificationFailed = 1,
    Usage = 2,
    BudgetExceeded = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(cli: &Cli) -> Outcome {
    match commands::dispatch(cli) {
        Ok((document, passed)) => Outcome {
            status: if passed {
                Status::Success
            } else {
                Status::VerificationFailed
            },
            stdout: document.render(cli.format),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: e.status(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
