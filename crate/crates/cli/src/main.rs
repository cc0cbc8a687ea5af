//! `qutrit`: builds, verifies and reports the entangled-state correlation
//! operators.

mod commands;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use qutrit_core::states::AmplitudeSet;
use qutrit_core::{Group, Label};

use commands::SampleArgs;
use render::{render, Cells, Document, Format, ModeArg};

/// Verification failures and runtime errors; usage errors exit with clap's 2.
const EXIT_FAILURE: u8 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Su2,
    Su3,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Su2 => Group::Su2,
            GroupArg::Su3 => Group::Su3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qutrit", version, about = "Exact Bell and qutrit correlation operators")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Exact field arithmetic, or floats for cross-checks.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    mode: ModeArg,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generator matrices and structure constants.
    Generators {
        #[command(subcommand)]
        action: GeneratorsAction,
    },
    /// The Bell and qutrit states.
    States {
        #[command(subcommand)]
        action: StatesAction,
    },
    /// Reduced density matrices, purities and entropies.
    Density {
        #[command(subcommand)]
        action: DensityAction,
    },
    /// Correlation operators and their bounds.
    Correlate {
        #[command(subcommand)]
        action: CorrelateAction,
    },
    /// Monte Carlo estimate of a correlation expectation.
    Sample {
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        #[arg(long)]
        state: Label,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        shots: u64,
        #[arg(long, env = "QUTRIT_SEED", default_value_t = 42)]
        seed: u64,
        /// Split the shots over this many concurrently sampled shards.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        shards: u32,
    },
    /// Printed values that disagree with the computed ones.
    Errata,
}

#[derive(Debug, Subcommand)]
enum GeneratorsAction {
    Dump {
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
    },
}

#[derive(Debug, Subcommand)]
enum StatesAction {
    List {
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
    },
    /// Converts a two-qutrit amplitude set to the other basis.
    BasisChange {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum DensityAction {
    Report {
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        /// Restrict to these states (repeatable).
        #[arg(long)]
        state: Vec<Label>,
    },
}

#[derive(Debug, Subcommand)]
enum CorrelateAction {
    Verify {
        #[arg(long, value_enum, default_value_t = GroupArg::Su3)]
        group: GroupArg,
    },
}

/// A bad invocation detected after parsing: clap's usage error and exit code.
fn usage_error(kind: ErrorKind, message: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, message).exit()
}

fn read_amplitudes(path: &PathBuf) -> AmplitudeSet {
    let text = fs::read_to_string(path)
        .unwrap_or_else(|e| usage_error(ErrorKind::Io, format!("cannot read {}: {e}", path.display())));
    let set: AmplitudeSet = serde_json::from_str(&text)
        .unwrap_or_else(|e| usage_error(ErrorKind::InvalidValue, format!("{}: {e}", path.display())));
    AmplitudeSet::new(set.basis, set.values)
        .unwrap_or_else(|e| usage_error(ErrorKind::InvalidValue, format!("{}: {e}", path.display())))
}

/// Runs the command; the flag is false when a verification check failed.
fn run(cli: &Cli) -> Result<(Document, bool)> {
    let cells = Cells(cli.mode);
    let doc = match &cli.command {
        Command::Generators { action: GeneratorsAction::Dump { group } } => {
            commands::generators_dump(group.map(Group::from), cells)?
        }
        Command::States { action: StatesAction::List { group } } => {
            commands::states_list(group.map(Group::from), cells)?
        }
        Command::States { action: StatesAction::BasisChange { input } } => {
            let set = read_amplitudes(input);
            if !set.is_normalized() {
                usage_error(
                    ErrorKind::InvalidValue,
                    format!("{}: amplitudes are not normalized", input.display()),
                );
            }
            commands::basis_change(&set, cells)?
        }
        Command::Density { action: DensityAction::Report { group, state } } => {
            commands::density_report(group.map(Group::from), state, cells)?
        }
        Command::Correlate { action: CorrelateAction::Verify { group } } => {
            return commands::correlate_verify(Group::from(*group), cells);
        }
        Command::Sample { group, state, shots, seed, shards } => {
            let group = group.map(Group::from);
            if group.is_some_and(|g| g != state.group()) {
                usage_error(
                    ErrorKind::ArgumentConflict,
                    format!("state {state} does not belong to {}", group.unwrap()),
                );
            }
            let args = SampleArgs { label: *state, shots: *shots, seed: *seed, shards: *shards };
            commands::sample(&args, cells)?
        }
        Command::Errata => commands::errata_report()?,
    };
    Ok((doc, true))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if matches!(cli.command, Command::Errata) && cli.mode == ModeArg::Float {
        usage_error(ErrorKind::ArgumentConflict, "errata are exact comparisons; --mode float is not allowed");
    }
    let outcome = run(&cli).and_then(|(doc, passed)| {
        emit(&render(doc, cli.format, cli.mode)?, cli.out.as_ref())?;
        Ok(passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(EXIT_FAILURE)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
