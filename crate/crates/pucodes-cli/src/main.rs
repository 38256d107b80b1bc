//! `pucodes`: generate complementary sequence sets and CCCs from spec
//! files, verify supplied sequences, run the matched-filter correlator over
//! sample files, and inspect the unitary-matrix catalog.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage/parse/validation errors.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod scalar_text;
mod seq_file;
mod spec_file;

use commands::GeneratePath;

#[derive(Debug)]
pub enum CliError {
    /// Bad input: malformed files, invalid arguments, impossible requests.
    Usage(String),
    /// The requested verification ran and failed.
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn failure(msg: impl Into<String>) -> Self {
        CliError::Failure(msg.into())
    }

    pub fn from_core(e: pucodes::Error) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn from_io_like(e: impl std::error::Error) -> Self {
        CliError::Usage(e.to_string())
    }

    pub fn with_path(self, path: &std::path::Path) -> Self {
        match self {
            CliError::Usage(msg) => CliError::Usage(format!("{}: {msg}", path.display())),
            other => other,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "pucodes",
    version,
    about = "Complementary sequence sets and complete complementary codes: \
             generation, verification, matched-filter correlation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate sequence sets from a generator spec file.
    Generate {
        /// Generator spec (JSON).
        spec: PathBuf,
        /// Output sequence file (.csv or .json).
        #[arg(short, long)]
        out: PathBuf,
        /// Write all M sets (out.setR.ext) instead of the spec file's set_index.
        #[arg(long)]
        all_sets: bool,
        /// Read sets along the other axis of the generating matrix.
        #[arg(long)]
        transpose: bool,
        /// Evaluate by the closed-form radix-M generator (standard plans).
        #[arg(long, conflicts_with = "pu")]
        rmg: bool,
        /// Evaluate by the polynomial matrix product (the default).
        #[arg(long)]
        pu: bool,
    },
    /// Check complementarity (and, with --ccc, mutual orthogonality).
    Verify {
        /// Sequence files, one set each.
        files: Vec<PathBuf>,
        /// Additionally require the sets to be mutually orthogonal.
        #[arg(long)]
        ccc: bool,
        /// Absolute tolerance for float kinds (default 1e-9 or $PUCODES_TOL).
        #[arg(long)]
        tol: Option<f64>,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run the efficient matched-filter correlator over a sample file.
    Correlate {
        /// Generator spec (JSON).
        spec: PathBuf,
        /// Input port (which set to correlate against).
        #[arg(long)]
        port: usize,
        /// Sample file (single row).
        #[arg(long)]
        input: PathBuf,
        /// Output file: one row per time step, M columns, flush tail included.
        #[arg(short, long)]
        out: PathBuf,
        /// Divide outputs by C in the float domain.
        #[arg(long)]
        normalize: bool,
    },
    /// Show a named unitary matrix, or list the catalog.
    Catalog {
        /// Entry name (dft, hadamard, qam3-paper, eisenstein3-paper).
        name: Option<String>,
        /// Matrix size for the size-generic families.
        #[arg(long)]
        size: Option<usize>,
    },
}

fn default_tol() -> f64 {
    std::env::var("PUCODES_TOL")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(pucodes::DEFAULT_TOL)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            spec,
            out,
            all_sets,
            transpose,
            rmg,
            pu: _,
        } => {
            let path = if rmg { GeneratePath::Rmg } else { GeneratePath::Pu };
            commands::generate(&spec, &out, all_sets, transpose, path)
        }
        Command::Verify {
            files,
            ccc,
            tol,
            json,
        } => commands::verify(&files, ccc, tol.unwrap_or_else(default_tol), json),
        Command::Correlate {
            spec,
            port,
            input,
            out,
            normalize,
        } => commands::correlate(&spec, port, &input, &out, normalize),
        Command::Catalog { name, size } => commands::catalog_cmd(name.as_deref(), size),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
