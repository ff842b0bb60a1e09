use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod config;

use config::Config;

#[derive(Parser)]
#[command(name = "kpower", version, about = "Build, analyze and verify k-power graphs of finite groups")]
struct Cli {
    /// TOML file whose keys match the long flags; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Omit the timestamp metadata so output is byte-stable.
    #[arg(long, global = true)]
    no_meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every parameter and criterion for one (G, k).
    Analyze(AnalyzeArgs),
    /// Write the graph as DOT or JSON.
    Export(ExportArgs),
    /// Check closed forms against the graphs of a group family.
    Verify(VerifyArgs),
    /// Solve the shifting-chair riddle for n chairs.
    Chair(ChairArgs),
    /// CSV matrix of one parameter, groups by exponents.
    Sweep(SweepArgs),
}

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Group spec: cyclic:N, sym:N, dihedral:N, quaternion:N, product:AxB...
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub k: Option<u64>,
    /// json, text or csv [default: text]
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ExportArgs {
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub k: Option<u64>,
    /// dot or json [default: dot]
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct FamilyArgs {
    /// cyclic, sym, dihedral, quaternion or product
    #[arg(long)]
    pub family: Option<String>,
    /// Smallest family parameter [default: 1]
    #[arg(long)]
    pub min_n: Option<u64>,
    /// Largest family parameter (largest factor for products)
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Most factors in a product [default: 3]
    #[arg(long)]
    pub factors: Option<usize>,
    /// Explicit groups instead of a family, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub group: Vec<String>,
    /// `all`, `N`, `LO..HI` or `LO..=HI` (both inclusive) [default: all]
    #[arg(long)]
    pub k: Option<String>,
    /// Same as `--k all`.
    #[arg(long)]
    pub k_all: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Theorem selectors, comma-separated, or `all` [default: all]
    #[arg(long, value_delimiter = ',')]
    pub theorem: Vec<String>,
    /// text or json [default: text]
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ChairArgs {
    #[arg(long)]
    pub n: Option<u64>,
    /// Print the seating after every whistle.
    #[arg(long)]
    pub trace: bool,
    /// text or json [default: text]
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// edges, components, fixed-points, max-degree, diameter, clique,
    /// chromatic, connected, forest, star, empty or perfect
    #[arg(long)]
    pub param: Option<String>,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    pub fn counterexample(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<kpower::Error> for CliError {
    fn from(e: kpower::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

pub struct Context {
    pub config: Config,
    pub meta: bool,
}

/// Write to `out`, or stdout when absent.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let name = match &cli.command {
        Command::Analyze(_) => "analyze",
        Command::Export(_) => "export",
        Command::Verify(_) => "verify",
        Command::Chair(_) => "chair",
        Command::Sweep(_) => "sweep",
    };
    let config = match &cli.config {
        Some(path) => Config::load(path, name)?,
        None => Config::default(),
    };
    let meta = !(cli.no_meta || config.flag("no-meta")?);
    let ctx = Context { config, meta };
    match cli.command {
        Command::Analyze(a) => commands::analyze(&ctx, a),
        Command::Export(a) => commands::export(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, a),
        Command::Chair(a) => commands::chair(&ctx, a),
        Command::Sweep(a) => commands::sweep(&ctx, a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kpower: {e}");
            ExitCode::from(e.code)
        }
    }
}
