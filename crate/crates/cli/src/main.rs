//! `biharm`: verification and classification runs as JSON, CSV or text reports.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! errors and unknown examples.

use std::path::PathBuf;
use std::process::ExitCode;

use biharmonic::classifier::SolverOptions;
use biharmonic::registry::{self, VerifyOptions};
use biharmonic::report::VerificationReport;
use biharmonic::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "biharm", version, about = "Verify biharmonic integral submanifolds of Sasakian space forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Biharmonic,
    Minus4,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suite of a registered example.
    Verify {
        /// Example name, e.g. corollary-c1 or legendre-helix:0.5.
        name: String,
        /// Samples per lattice axis.
        #[arg(long, default_value_t = registry::DEFAULT_GRID)]
        grid: usize,
        /// Tolerance replacing every per-check default.
        #[arg(long)]
        tol: Option<f64>,
        /// Use a random unitary frame with this seed instead of the standard one.
        #[arg(long)]
        basis_seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the registered example names.
    List,
    /// Solve the flat and product classification systems.
    Classify {
        #[arg(long, conflicts_with = "c_sweep", allow_negative_numbers = true)]
        c: Option<f64>,
        /// Range `lo:hi:step`, inclusive of `hi`.
        #[arg(long, allow_hyphen_values = true)]
        c_sweep: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Biharmonic)]
        mode: ModeArg,
        /// Random Newton starts of the cross-check sweep; 0 disables it.
        #[arg(long, default_value_t = SolverOptions::default().fallback_starts)]
        fallback_starts: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

fn parse_sweep(spec: &str) -> Option<(f64, f64, f64)> {
    let parts: Vec<f64> = spec.split(':').map(str::parse).collect::<Result<_, _>>().ok()?;
    match parts[..] {
        [lo, hi, step] => Some((lo, hi, step)),
        _ => None,
    }
}

fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn emit(report: &VerificationReport, format: Format, out: Option<PathBuf>) -> ExitCode {
    let text = render(report, format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::List => {
            for name in registry::EXAMPLES {
                println!("{name}");
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            name,
            grid,
            tol,
            basis_seed,
            format,
            out,
        } => {
            let options = VerifyOptions {
                grid,
                tolerance: tol,
                basis_seed,
            };
            match registry::verify(&name, options) {
                Ok(report) => emit(&report, format, out),
                Err(e) => usage(e),
            }
        }
        Command::Classify {
            c,
            c_sweep,
            mode,
            fallback_starts,
            format,
            out,
        } => {
            let options = SolverOptions {
                fallback_starts,
                ..SolverOptions::default()
            };
            let result = match (mode, c, c_sweep) {
                (ModeArg::Minus4, c, None) if c.is_none_or(|c| c == 1.0) => registry::classify_minus4(&options),
                (ModeArg::Minus4, _, _) => return usage("--mode minus4 is defined for c = 1 only"),
                (ModeArg::Biharmonic, Some(c), None) => registry::classify(c, &options),
                (ModeArg::Biharmonic, None, Some(spec)) => match parse_sweep(&spec) {
                    Some((lo, hi, step)) => registry::classify_sweep(lo, hi, step, &options),
                    None => return usage(format!("invalid sweep {spec:?}, expected lo:hi:step")),
                },
                (ModeArg::Biharmonic, None, None) => return usage("classify needs --c or --c-sweep"),
                (ModeArg::Biharmonic, Some(_), Some(_)) => unreachable!("clap rejects --c with --c-sweep"),
            };
            match result {
                Ok(report) => emit(&report, format, out),
                Err(e @ Error::InvalidParameter(_)) => usage(e),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse())
}
