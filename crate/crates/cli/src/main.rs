//! `frobenius`: exact Frobenius coin-exchange statistics from the command line.
//!
//! Exit codes: 0 success, 1 mathematical mismatch, 2 input validation,
//! 3 unsupported request, 4 resource guard.

mod commands;
mod output;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobenius::oracle::MAX_BOUND_ENV;
use frobenius::{Error, Limits};

#[derive(Parser, Debug)]
#[command(name = "frobenius", version, about = "Exact Frobenius coin-exchange invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest representation-table index the oracle may allocate.
    #[arg(long, global = true, env = MAX_BOUND_ENV)]
    pub max_bound: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute g, c, s, s^m or the at-most-k statistics.
    Compute(ComputeArgs),
    /// List the integers with exactly (or at most) k representations.
    Enumerate(EnumerateArgs),
    /// Representation count of every integer up to a bound.
    Classify(ClassifyArgs),
    /// Emit generating-function polynomials.
    Genfun(GenfunArgs),
    /// Compare the closed forms against the oracle.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Denominations, comma separated.
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub params: Vec<i64>,
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    /// Exponent for `sm`.
    #[arg(long)]
    pub m: Option<u32>,
    /// Statistics, comma separated: g, c, s, sm, gle, cle, sle.
    #[arg(long, value_delimiter = ',', required = true)]
    pub stat: Vec<String>,
    /// Use the brute-force oracle even for two denominations.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub params: Vec<i64>,
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    /// Select integers with at most k representations instead of exactly k.
    #[arg(long)]
    pub at_most: bool,
    /// Only consider integers up to this bound.
    #[arg(long)]
    pub bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
    pub params: Vec<i64>,
    #[arg(long)]
    pub bound: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct GenfunArgs {
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub params: Vec<i64>,
    /// Emit p_k, the polynomial of integers with exactly k representations.
    #[arg(long, conflicts_with_all = ["numerator", "denham", "cyclotomic"])]
    pub k: Option<u64>,
    /// Emit the numerator h(z) of the semigroup's generating function.
    #[arg(long)]
    pub numerator: bool,
    /// Print the number of terms of h(z) for three denominations.
    #[arg(long, conflicts_with_all = ["numerator", "cyclotomic"])]
    pub denham: bool,
    /// Emit the n-th cyclotomic polynomial.
    #[arg(long, value_name = "N", conflicts_with = "numerator")]
    pub cyclotomic: Option<u64>,
    /// With --k and --bound: the 0/1 indicator of integers with more than k
    /// representations.
    #[arg(long, requires_all = ["k", "bound"])]
    pub indicator: bool,
    #[arg(long)]
    pub bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A single pair to verify.
    #[arg(long, value_delimiter = ',', conflicts_with = "sweep", allow_negative_numbers = true)]
    pub params: Vec<i64>,
    /// Verify every coprime pair a < b <= N.
    #[arg(long, value_name = "N")]
    pub sweep: Option<u64>,
    #[arg(long, default_value_t = 3)]
    pub kmax: u64,
    #[arg(long, default_value_t = 3)]
    pub mmax: u32,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Failure of a command, carrying the process exit code.
#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Lib(e) => match e {
                Error::NotDivisible | Error::IdentityViolation(_) => 1,
                Error::EmptyList
                | Error::NonPositive(_)
                | Error::NotCoprime(_)
                | Error::WrongArity { .. }
                | Error::NotPrime(_)
                | Error::Parse(_) => 2,
                Error::UnsupportedK { .. } | Error::InfiniteSet { .. } | Error::IncompleteSet => 3,
                Error::BoundTooLarge { .. } | Error::Indeterminate { .. } => 4,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = cli.max_bound.map(Limits::new).unwrap_or_default();
    let result = match &cli.command {
        Command::Compute(args) => commands::compute(args, &limits),
        Command::Enumerate(args) => commands::enumerate(args, &limits),
        Command::Classify(args) => commands::classify(args, &limits),
        Command::Genfun(args) => commands::genfun(args, &limits),
        Command::Verify(args) => verify::run(args, &limits),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Lib(e @ Error::UnsupportedK { .. }) => {
                    eprintln!("error: {e}");
                    eprintln!("hint: pass --oracle to compute it by enumeration");
                }
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Mismatch(msg) => println!("{msg}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
