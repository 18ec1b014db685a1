use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod output;
mod spec;
mod suites;

use spec::BuiltMonoid;

/// Exit codes: 0 success/verified, 1 disagreement found, 2 input error,
/// 3 budget exceeded.
#[derive(Parser)]
#[command(name = "mcoset", version, about = "Finite monoids and their coset orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a monoid from a JSON spec and print a summary.
    Build {
        spec: PathBuf,
        /// Override enumeration/closure element budgets.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Compute the coset order X(M) and render it.
    Xm {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Decide whether X(M) is linear (the Ramsey criterion).
    Check {
        spec: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a verification suite and emit a JSON-lines report.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lower the per-instance function budget; overruns become skips.
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum Suite {
    S33,
    S34,
    S35k1,
    S35k2,
    Tetris,
    Hecke,
    Faces,
    All,
}

fn exit_code_for(err: &monoid_cosets::Error) -> u8 {
    use monoid_cosets::Error::*;
    match err {
        FunctionBudget { .. }
        | ClosureBudget { .. }
        | EnumerationBound { .. }
        | FaceBudget { .. }
        | WordBudget { .. }
        | EliminationBudget => 3,
        _ => 2,
    }
}

fn write_out(out: Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(spec_path: &PathBuf, budget: Option<usize>) -> Result<BuiltMonoid, (u8, String)> {
    let text = std::fs::read_to_string(spec_path)
        .map_err(|e| (2, format!("cannot read {}: {e}", spec_path.display())))?;
    let spec: spec::MonoidSpec =
        serde_json::from_str(&text).map_err(|e| (2, format!("invalid spec: {e}")))?;
    spec.build(budget).map_err(|e| (exit_code_for(&e), e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<u8, (u8, String)> = match cli.command {
        Command::Build { spec, budget } => load(&spec, budget).map(|built| {
            print!("{}", output::summary(&built));
            0
        }),
        Command::Xm { spec, format, out, budget } => load(&spec, budget).and_then(|built| {
            let text = match format {
                Format::Table => output::xm_table(&built),
                Format::Json => output::xm_json(&built),
                Format::Dot => {
                    monoid_cosets::dot::coset_dot(&built.monoid.coset_poset(), &built.monoid)
                }
            };
            write_out(out, &text).map_err(|msg| (2, msg))?;
            Ok(0)
        }),
        Command::Check { spec, budget } => load(&spec, budget).map(|built| {
            print!("{}", output::check(&built));
            0
        }),
        Command::Verify { suite, nmax, out, budget } => suites::run(suite, nmax, budget)
            .map_err(|e| (exit_code_for(&e), e.to_string()))
            .and_then(|report| {
                write_out(out, &report.text).map_err(|msg| (2, msg))?;
                Ok(if report.disagreements > 0 {
                    1
                } else if report.skipped > 0 {
                    3
                } else {
                    0
                })
            }),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
