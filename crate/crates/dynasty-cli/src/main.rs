//! `dynasty` — command-line front door for the dynastic planning solver.
//!
//! Subcommands: `table` (benchmark table with golden checks), `solve`
//! (one trajectory as CSV), `curves` (value/Gini/Lorenz data plus SVG),
//! `verify` (oracle and invariant suite). Exit codes: 0 success,
//! 1 golden/verification failure, 2 usage or config error.

mod config;
mod curves;
mod render;
mod solve;
mod svg;
mod table;
mod verify;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dynasty_core::inequality::GiniNormalization;

use config::{HorizonSpec, Scenario};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable config, impossible scenario: exit code 2.
    Usage(String),
    /// Computation ran but a golden or verification check failed: exit 1.
    Failure(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => f.write_str(msg),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Write a file (creating parent directories) and log the path.
pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)
            .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", parent.display())))?;
    }
    fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

pub fn load_config(path: &Path) -> CliResult<Vec<Scenario>> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    config::parse_config(&text).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_case(s: &str) -> Result<usize, String> {
    let up = s.to_ascii_uppercase();
    if let Some(i) = table::CASE_LABELS.iter().position(|&l| l == up) {
        return Ok(i + 1);
    }
    if let Ok(d) = up.parse::<usize>() {
        if (1..=8).contains(&d) {
            return Ok(d);
        }
    }
    Err(format!("expected a case I..VIII (or 1..8), got `{s}`"))
}

fn builtin_scenario(case: usize, horizon: HorizonSpec) -> Scenario {
    Scenario {
        name: format!("case_{}", table::CASE_LABELS[case - 1].to_lowercase()),
        params: table::builtin_params(case),
        horizon,
        eps: config::DEFAULT_PLATEAU_EPS,
    }
}

#[derive(Parser)]
#[command(
    name = "dynasty",
    version,
    about = "Finite-horizon dynastic planning: optimal trajectories, horizon search, inequality curves, and self-verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the eight-case benchmark table (builtin rows are checked
    /// against embedded golden values).
    Table(TableArgs),
    /// Emit the optimal trajectory of one or more scenarios as CSV.
    Solve(SolveArgs),
    /// Emit value, Gini, and Lorenz curves (CSV + SVG) over a horizon range.
    Curves(CurvesArgs),
    /// Run the oracle and invariant self-checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Directory for emitted artifacts.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Decimal places for finite numbers (0 = full round-trip precision).
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

#[derive(Args)]
struct TableArgs {
    /// Scenario file; omit for the builtin eight cases.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("scenario").required(true).args(["case", "config"])))]
struct SolveArgs {
    /// Builtin benchmark case I..VIII.
    #[arg(long, value_parser = parse_case)]
    case: Option<usize>,
    /// Scenario file (every scenario in it is solved).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Plateau tolerance used when the optimal horizon is infinite.
    #[arg(long)]
    eps: Option<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
#[command(group(ArgGroup::new("scenario").required(true).args(["case", "config"])))]
struct CurvesArgs {
    /// Builtin benchmark case I..VIII (plotted over horizons 1..=400).
    #[arg(long, value_parser = parse_case)]
    case: Option<usize>,
    /// Scenario file (each scenario needs an n_from/n_to range).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Gini denominator: `paper` divides by 2n, `conventional` by 2(n+1).
    #[arg(long, value_enum, default_value_t = Denominator::Paper)]
    denominator: Denominator,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// quick: shallow sweep; full: deeper horizons plus the table goldens.
    #[arg(value_enum, default_value_t = Depth::Quick)]
    depth: Depth,
    /// Seed for the parameter draws (same seed ⇒ byte-identical report).
    #[arg(long, default_value_t = 17)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Denominator {
    Paper,
    Conventional,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Depth {
    Quick,
    Full,
}

fn scenarios_for(
    case: Option<usize>,
    config: Option<&Path>,
    default_horizon: HorizonSpec,
) -> CliResult<Vec<Scenario>> {
    match (case, config) {
        (Some(case), None) => Ok(vec![builtin_scenario(case, default_horizon)]),
        (None, Some(path)) => load_config(path),
        // clap's arg group enforces exactly one.
        _ => unreachable!("one of --case/--config is required"),
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Table(args) => table::run(
            args.config.as_deref(),
            &args.output.out,
            args.output.precision,
        ),
        Command::Solve(args) => {
            let mut scenarios = scenarios_for(
                args.case,
                args.config.as_deref(),
                HorizonSpec::Search,
            )?;
            if let Some(eps) = args.eps {
                if eps <= 0.0 {
                    return Err(CliError::Usage("--eps must be positive".to_string()));
                }
                for s in &mut scenarios {
                    s.eps = eps;
                }
            }
            for s in &scenarios {
                solve::run(s, &args.output.out, args.output.precision)?;
            }
            Ok(())
        }
        Command::Curves(args) => {
            let scenarios = scenarios_for(
                args.case,
                args.config.as_deref(),
                HorizonSpec::Range {
                    from: 1,
                    to: 400,
                    stride: 1,
                },
            )?;
            let normalization = match args.denominator {
                Denominator::Paper => GiniNormalization::Horizon,
                Denominator::Conventional => GiniNormalization::SampleSize,
            };
            for s in &scenarios {
                curves::run(s, &args.output.out, args.output.precision, normalization)?;
            }
            Ok(())
        }
        Command::Verify(args) => verify::run(args.depth == Depth::Full, args.seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
