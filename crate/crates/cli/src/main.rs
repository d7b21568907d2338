//! `qhurwitz`: exact quantum weighted Hurwitz numbers from the command line.
//!
//! Every subcommand prints one document to standard output (JSON by default,
//! CSV with `--output csv`). Exit status is 0 on success, 1 when a
//! verification fails and 2 on invalid input.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhurwitz_core::{BigRational, CharacterStore, Partition};

use crate::report::{Failure, Report};

#[derive(Parser, Debug)]
#[command(name = "qhurwitz", version, about = "Quantum weighted Hurwitz numbers, exactly")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    output: OutputFormat,

    /// Directory for cached character tables (overrides $HURWITZ_CACHE_DIR).
    #[arg(long, global = true)]
    char_cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quantum weighted double Hurwitz number H^d(μ, ν) as a q-series.
    Hurwitz(HurwitzArgs),
    /// Weights w(λ) of colength profiles λ ⊢ d.
    Weights(WeightsArgs),
    /// Partition function Z_d and its two leading coefficients.
    Zfun(ZfunArgs),
    /// Pushforward measure on partitions of d (and Θ on configurations with --n).
    Measure(MeasureArgs),
    /// Compare τ-function coefficients with Hurwitz numbers coefficient by coefficient.
    TauCheck(TauCheckArgs),
    /// Two-term zero-temperature expansion of H^d(μ, ν).
    Asympt(AsymptArgs),
}

#[derive(Args, Debug)]
pub struct HurwitzArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Partition,
    /// Series truncation order (default d + 4).
    #[arg(long)]
    pub q_order: Option<usize>,
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[arg(long)]
    pub d: usize,
    /// A single profile λ ⊢ d; all profiles when omitted.
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long)]
    pub q_order: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ZfunArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub q_order: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[arg(long)]
    pub d: usize,
    /// Rational in (0, 1), written p/q.
    #[arg(long, value_parser = parse_q)]
    pub q: BigRational,
    /// Also report Θ on branch configurations of S_n.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TauCheckArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, default_value_t = 3)]
    pub d_max: usize,
}

#[derive(Args, Debug)]
pub struct AsymptArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Partition,
}

fn parse_q(text: &str) -> Result<BigRational, String> {
    qhurwitz_core::qalgebra::parse_rational(text).map_err(|e| e.to_string())
}

fn store_for(flag: Option<PathBuf>) -> CharacterStore {
    match flag {
        Some(dir) => CharacterStore::with_dir(dir),
        None => CharacterStore::from_env(),
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let store = store_for(cli.char_cache_dir);
    match cli.command {
        Command::Hurwitz(a) => commands::hurwitz(&store, &a),
        Command::Weights(a) => commands::weights(&a),
        Command::Zfun(a) => commands::zfun(&a),
        Command::Measure(a) => commands::measure(&a),
        Command::TauCheck(a) => commands::tau_check(&store, &a),
        Command::Asympt(a) => commands::asympt(&store, &a),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).format_timestamp(None).init();
    let cli = Cli::parse();
    let format = cli.output;
    match run(cli) {
        Ok(report) => {
            if let Err(e) = report.emit(format) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
