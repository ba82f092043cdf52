//! Command-line front end: parse graphs or family specs, run analyses and
//! sweeps, emit JSON/CSV reports, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 precondition failure (e.g. disconnected input where connectivity is
//! required).

mod analyze;
mod sweep;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rigidity::{Error, Graph, OptimizerConfig};

#[derive(Parser)]
#[command(
    name = "rigidity",
    version,
    about = "Quantitative graph rigidity analysis",
    long_about = "Constructs frameworks, computes rigidity spectra and the rigidity \
                  eigenvalue, estimates the generalized algebraic connectivity and the \
                  d-rigidity ratio, and checks the spectral bounds relating rigidity to \
                  connectivity and diameter."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph: connectivity invariants, spectrum, and (with
    /// --d) rigidity estimates and bound reports.
    Analyze(AnalyzeArgs),
    /// Tabulate a metric over a parameter range as CSV.
    Sweep(SweepArgs),
    /// Run the invariant suites and exit nonzero on any failure.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Family spec: complete:n, path:n,d, cycle:n,d, star:n,d, turan:k,r.
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
    /// Graph file: JSON {"n": .., "edges": [[i,j], ..]} or a plain-text
    /// edge list (first line n, then "i j" lines).
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct OptimizerArgs {
    /// Optimizer restarts.
    #[arg(long, default_value_t = 16)]
    restarts: usize,
    /// Objective evaluations per restart.
    #[arg(long, default_value_t = 400)]
    iterations: usize,
    /// Random seed; identical seeds give identical output documents.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Initial perturbation step on the normalized realization.
    #[arg(long, default_value_t = 0.5)]
    step_init: f64,
    /// Step shrink factor after a rejected move.
    #[arg(long, default_value_t = 0.8)]
    step_decay: f64,
    /// Reject candidates with a smaller minimum pairwise distance.
    #[arg(long, default_value_t = 1e-6)]
    injectivity_floor: f64,
}

impl OptimizerArgs {
    fn config(&self) -> OptimizerConfig {
        OptimizerConfig {
            restarts: self.restarts,
            iterations: self.iterations,
            seed: self.seed,
            step_init: self.step_init,
            step_decay: self.step_decay,
            injectivity_floor: self.injectivity_floor,
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Ambient dimension for the rigidity analysis.
    #[arg(long)]
    d: Option<usize>,
    #[command(flatten)]
    optimizer: OptimizerArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(subcommand)]
    kind: SweepKind,
}

#[derive(Subcommand)]
enum SweepKind {
    /// a_1(C_2n,d) / a_1(C_n,d) against n; tends to 1/4.
    AsymptoticRatio {
        #[arg(long)]
        d: usize,
        /// Inclusive range, e.g. 16..256.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// d-rigidity ratio estimates for a family against n.
    Ratio {
        /// Family name: complete, path, cycle, or star.
        #[arg(long)]
        family: String,
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[command(flatten)]
        optimizer: OptimizerArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// a_1(P_n,d) <= a_1(C_2n,d) reports against n.
    PathCycle {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Extra graph file to include in the checks.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Spectra,
    Bounds,
    Rigidity,
    All,
}

/// Inclusive "a..b" range.
fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let lo: usize = a.trim().parse().map_err(|_| format!("invalid start {a:?}"))?;
    let hi: usize = b.trim().parse().map_err(|_| format!("invalid end {b:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// Failure modes mapped onto process exit codes.
enum CliError {
    /// Exit 1: a verification check failed.
    Verification(String),
    /// Exit 2: the input could not be parsed or was malformed.
    Invalid(String),
    /// Exit 3: input violated a precondition (e.g. disconnected).
    Precondition(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Verification(m) | CliError::Invalid(m) | CliError::Precondition(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Disconnected(_) => CliError::Precondition(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn load_input(input: &InputArgs) -> Result<(String, Graph), CliError> {
    match (&input.family, &input.graph) {
        (Some(spec_text), None) => {
            let spec: rigidity::FamilySpec = spec_text
                .parse()
                .map_err(|e: Error| CliError::Invalid(e.to_string()))?;
            let g = rigidity::generate(&spec).map_err(CliError::from)?;
            Ok((spec.to_string(), g))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
            let g = rigidity::io::graph_from_str(&text)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            Ok((path.display().to_string(), g))
        }
        _ => Err(CliError::Invalid(
            "exactly one of --family or --graph is required".into(),
        )),
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => analyze::run(args),
        Command::Sweep(args) => sweep::run(args),
        Command::Verify(args) => verify::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
