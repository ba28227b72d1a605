use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::{Parser, Subcommand, ValueEnum};
use hankel_core::determinants::DeterminantKind;
use hankel_core::omega::{DEFAULT_GRID, DEFAULT_TOL, MIN_TOL};
use hankel_core::subordination::ClassTag;
use hankel_core::ScalarMode;
use hankel_verifier::catalog::CatalogName;
use hankel_verifier::suites::{self, AllOptions, DEFAULT_COUNT, DEFAULT_SEED};
use hankel_verifier::VerificationReport;

#[derive(Debug, Parser)]
#[command(name = "hankel-verify", version, about = "Verify sharp bounds on second Hankel and Toeplitz determinants of inverse logarithmic coefficients")]
struct Cli {
    /// Scalar mode for the catalog computations.
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    mode: Mode,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Interior scan density for the maximization suite.
    #[arg(long, default_value_t = DEFAULT_GRID, value_parser = RangedU64ValueParser::<usize>::new().range(2..), global = true)]
    grid: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

impl From<Mode> for ScalarMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => ScalarMode::Exact,
            Mode::Float => ScalarMode::Float,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Class {
    StarlikeSym,
    ConvexSym,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Functional {
    Hankel,
    Toeplitz,
}

fn parse_function(s: &str) -> Result<CatalogName, String> {
    CatalogName::parse(s).ok_or_else(|| format!("unknown function '{s}' (expected h1..h8 or koebe)"))
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t >= MIN_TOL && t.is_finite() {
        Ok(t)
    } else {
        Err(format!("tolerance must be finite and at least {MIN_TOL:e}"))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalog functions by closed form and series pipeline.
    Extremal,
    /// Monte Carlo falsification of one bound.
    Sample {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, value_enum)]
        functional: Functional,
        #[arg(long, default_value_t = DEFAULT_COUNT, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Certified maxima of the majorants over the feasible region.
    Maximize {
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
        tol: f64,
    },
    /// Taylor, inverse and logarithmic coefficients of a catalog function.
    Coeffs {
        #[arg(long, value_parser = parse_function)]
        function: CatalogName,
        #[arg(long, default_value_t = 8, value_parser = RangedU64ValueParser::<usize>::new().range(1..=64))]
        upto: usize,
    },
    /// Every suite, written to one combined report.
    All {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_COUNT, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
        tol: f64,
    },
}

fn emit(text: &str, path: Option<&PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summarize(report: &VerificationReport) {
    let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        eprintln!("{}: PASS ({} checks)", report.suite, report.checks.len());
    } else {
        eprintln!("{}: FAIL ({} of {} checks): {}", report.suite, failed.len(), report.checks.len(), failed.join(", "));
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let mode: ScalarMode = cli.mode.into();
    let single = |r: hankel_core::error::Result<VerificationReport>| -> Result<bool, String> {
        let r = r.map_err(|e| e.to_string())?;
        summarize(&r);
        emit(&r.to_json(), cli.json.as_ref()).map_err(|e| e.to_string())?;
        Ok(r.passed)
    };
    match cli.command {
        Command::Extremal => single(suites::run_extremal_suite(mode)),
        Command::Sample { class, functional, count, seed } => {
            let class = match class {
                Class::StarlikeSym => ClassTag::StarlikeSym,
                Class::ConvexSym => ClassTag::ConvexSym,
            };
            let kind = match functional {
                Functional::Hankel => DeterminantKind::Hankel,
                Functional::Toeplitz => DeterminantKind::Toeplitz,
            };
            single(suites::run_sampling_suite(class, kind, count, seed))
        }
        Command::Maximize { tol } => single(suites::run_maximization_suite(tol, cli.grid)),
        Command::Coeffs { function, upto } => single(suites::run_coeffs(function, upto, mode)),
        Command::All { out, count, seed, tol } => {
            let opts = AllOptions { mode, count, seed, tol, grid: cli.grid };
            let combined = suites::run_all(&opts).map_err(|e| e.to_string())?;
            combined.suites.iter().for_each(summarize);
            let text = combined.to_json();
            std::fs::write(&out, &text).map_err(|e| format!("{}: {e}", out.display()))?;
            if cli.json.is_some() {
                emit(&text, cli.json.as_ref()).map_err(|e| e.to_string())?;
            }
            Ok(combined.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
