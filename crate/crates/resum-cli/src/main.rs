//! `resum`: sum a series from a problem file, reproduce the benchmark tables, export scans.

mod bench;
mod format;
mod problem;
mod scan;
mod sum;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use resum::ScanGrid;

use problem::ProblemFile;

#[derive(Parser)]
#[command(name = "resum", version, about = "Resummation of truncated divergent series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimization solutions, criterion selections and ridge result for a problem file.
    Sum {
        path: PathBuf,
        /// borel-leroy, mittag-leffler, frac-derivative, frac-integral or all (comma separated)
        #[arg(long)]
        kind: Option<String>,
        /// lasso1, lasso2, genlass1, genlass2, ridge or all (comma separated)
        #[arg(long)]
        criterion: Option<String>,
        /// lo:hi:points
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the benchmark tables and compare them with the stored values.
    Bench {
        /// Table number; repeat for several, omit for all.
        #[arg(long = "table")]
        tables: Vec<u8>,
        #[arg(long, default_value = "bench-out")]
        out: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Amplitudes at two orders and the ridge functional along the grid.
    Scan {
        path: PathBuf,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Exit codes: 1 tolerance failure, 2 input error, 3 no defined result.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn undefined(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

/// `--grid`, then the problem file, then RESUM_GRID, then the default window.
pub fn resolve_grid(flag: Option<&str>, file: Option<ScanGrid>) -> Result<ScanGrid, Failure> {
    if let Some(g) = flag {
        return g.parse().map_err(|e: resum::Error| Failure::input(format!("--grid: {e}")));
    }
    if let Some(g) = file {
        return Ok(g);
    }
    match std::env::var("RESUM_GRID") {
        Ok(g) => g.parse().map_err(|e: resum::Error| Failure::input(format!("RESUM_GRID: {e}"))),
        Err(_) => Ok(ScanGrid::DEFAULT),
    }
}

pub fn load_problem(path: &Path) -> Result<ProblemFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Sum { path, kind, criterion, grid, format } => {
            sum::run(&path, kind.as_deref(), criterion.as_deref(), grid.as_deref(), format, &mut out)
        }
        Command::Bench { tables, out: dir, grid } => bench::run(&tables, &dir, grid.as_deref(), &mut out),
        Command::Scan { path, kind, grid, format } => {
            scan::run(&path, kind.as_deref(), grid.as_deref(), format, &mut out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
