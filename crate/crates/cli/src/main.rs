//! `parthooks`: tables, hook counts, moments, series dumps and identity
//! checks for partition statistics.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid parameters.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

pub const DEFAULT_ORDER: usize = 60;

#[derive(Parser, Debug)]
#[command(name = "parthooks", version, about)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format; tables default to tsv, verification reports to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Truncation order N of every series (coefficients z^0..z^N).
    #[arg(
        long,
        global = true,
        env = "PARTHOOKS_ORDER",
        value_parser = clap::value_parser!(u32).range(1..)
    )]
    pub order: Option<u32>,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Allow brute-force enumeration beyond n = 60.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Per-partition λ/ν/γ vectors of n and their totals.
    Table {
        n: usize,
        #[arg(value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Totals of each hook type of length k over the partitions of n.
    Hooks { n: usize, k: usize },
    /// A binomial or power moment of the k-th part (or multiplicity) over partitions of n.
    Moments {
        n: usize,
        k: usize,
        d: usize,
        #[arg(value_enum, default_value_t = FamilyArg::Lambda)]
        which: FamilyArg,
        #[arg(value_enum, default_value_t = Kind::Binomial)]
        kind: Kind,
    },
    /// Run identity verifiers (a label such as THM_1_1, or "all").
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        overrides: VerifyOverrides,
    },
    /// Dump the coefficients of a generating function.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[command(flatten)]
        params: SeriesParams,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct VerifyOverrides {
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub d_max: Option<usize>,
    #[arg(long)]
    pub alpha_max: Option<usize>,
    #[arg(long)]
    pub beta_max: Option<usize>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct SeriesParams {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub alpha: Option<usize>,
    #[arg(long)]
    pub beta: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Lambda,
    Nu,
    Gamma,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Lambda,
    Nu,
}

impl From<FamilyArg> for parthooks_core::Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Lambda => parthooks_core::Family::Lambda,
            FamilyArg::Nu => parthooks_core::Family::Nu,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Binomial,
    Power,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    Euler,
    Nu,
    Lambda,
    Gamma,
    Sigma,
    S,
    Qbinom,
    Prop12rhs,
    LambdaBinom,
    NuBinom,
}

/// Failure modes that map onto process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit 2.
    Invalid(String),
    /// Output was produced but some check disagreed; exit 1.
    Mismatch(String),
}

impl From<parthooks_core::Error> for CliError {
    fn from(e: parthooks_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Invalid(format!("output: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match cli.command {
        Command::Table { n, which } => commands::table(g, n, which),
        Command::Hooks { n, k } => commands::hooks(g, n, k),
        Command::Moments {
            n,
            k,
            d,
            which,
            kind,
        } => commands::moments(g, n, k, d, which.into(), kind),
        Command::Verify { suite, overrides } => commands::verify(g, &suite, &overrides),
        Command::Series { name, params } => commands::series(g, name, &params),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Mismatch(msg)) => {
            eprintln!("parthooks: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("parthooks: {msg}");
            ExitCode::from(2)
        }
    }
}
