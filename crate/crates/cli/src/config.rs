use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rankforge_core::{Convergence, DampingFactor};

use crate::error::{CliError, CliResult};

/// Environment variable naming a directory with the loose corpus files.
pub const DATA_DIR_ENV: &str = "RANKFORGE_DATA_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "rankforge",
    version,
    about = "PageRank, CheiRank, 2DRank and Google matrix spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-node PageRank, CheiRank and 2DRank table.
    Rank(CommonArgs),
    /// Eigenvalues of the Google matrix.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        /// Use the matrix of the reversed graph.
        #[arg(long)]
        reversed: bool,
    },
    /// In- and out-degree histograms.
    Degrees {
        #[command(flatten)]
        common: CommonArgs,
        /// Append a fitted power-law exponent per direction.
        #[arg(long)]
        fit: bool,
    },
    /// Rank displacements caused by link edits.
    Perturb {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file with `add` and `remove` link lists.
        #[arg(long, value_name = "PATH")]
        scenario: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Gbpm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Link list (`src. dst dst,`) or JSON graph (`.json`).
    #[arg(long, value_name = "PATH")]
    pub graph: Option<PathBuf>,
    /// Embedded corpus.
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 0.85)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    /// Defaults to json for `perturb` and csv otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Path(PathBuf),
    Builtin(Builtin),
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: Input,
    pub alpha: DampingFactor,
    pub convergence: Convergence,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs, default_format: Format) -> CliResult<Self> {
        let input = match (&args.input.graph, args.input.builtin) {
            (Some(p), None) => Input::Path(p.clone()),
            (None, Some(b)) => Input::Builtin(b),
            _ => {
                return Err(CliError::Usage(
                    "exactly one of --graph or --builtin is required".into(),
                ))
            }
        };
        let alpha = DampingFactor::new(args.alpha).map_err(|e| CliError::Usage(e.to_string()))?;
        let convergence = Convergence {
            tol: args.tol,
            max_iter: args.max_iter,
        };
        convergence
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(RunConfig {
            input,
            alpha,
            convergence,
            format: args.format.unwrap_or(default_format),
            out: args.out.clone(),
        })
    }
}
