use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mhalg::commands::{self, Outcome, Selection, What};
use mhalg::format::{from_json, to_json, InstanceDto};
use mhalg::instance::{self, BuildKind};
use mhalg::report::render_text;
use mhalg::CliError;

#[derive(Parser)]
#[command(name = "mhalg", version, about = "Build and verify finite multiplier Hopf algebroids with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    GroupoidFn,
    GroupoidConv,
    Tensor,
    Crossed,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    Qi,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Counits,
    Antipode,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build an instance file from a groupoid, tensor or crossed-product input.
    Build {
        kind: Kind,
        input: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        /// Write the instance here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Build the function algebra of a category that is not a groupoid.
        #[arg(long)]
        allow_non_groupoid: bool,
    },
    /// Check axioms of an instance.
    Check {
        instance: PathBuf,
        /// `all` or a comma-separated list of axiom codes.
        #[arg(long, default_value = "all")]
        axioms: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timings (reports are then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Derive the counits and the antipode and verify them.
    Derive {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        what: WhatArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn emit(outcome: Outcome, format: Format, out: Option<&Path>) -> Result<u8, CliError> {
    let text = match format {
        Format::Json => to_json(&outcome.report),
        Format::Text => render_text(&outcome.report),
    };
    write(out, &text)?;
    if let Some(e) = &outcome.report.error {
        eprintln!("mhalg: {}", e);
    }
    Ok(outcome.exit_code as u8)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Build { kind, input, field, out, allow_non_groupoid } => {
            let kind = match kind {
                Kind::GroupoidFn => BuildKind::GroupoidFn,
                Kind::GroupoidConv => BuildKind::GroupoidConv,
                Kind::Tensor => BuildKind::Tensor,
                Kind::Crossed => BuildKind::Crossed,
            };
            let field = instance::parse_field(match field {
                FieldArg::Q => "q",
                FieldArg::Qi => "qi",
            })?;
            let dto = instance::build(kind, &read(&input)?, field, allow_non_groupoid)?;
            write(out.as_deref(), &to_json(&dto))?;
            Ok(0)
        }
        Command::Check { instance, axioms, format, out, timings } => {
            let dto: InstanceDto = from_json(&read(&instance)?)?;
            let outcome = commands::check(&dto, &Selection::parse(&axioms)?, timings)?;
            emit(outcome, format, out.as_deref())
        }
        Command::Derive { instance, what, format, out, timings } => {
            let dto: InstanceDto = from_json(&read(&instance)?)?;
            let what = match what {
                WhatArg::Counits => What::Counits,
                WhatArg::Antipode => What::Antipode,
                WhatArg::All => What::All,
            };
            emit(commands::derive(&dto, what, timings)?, format, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("mhalg: {}", e);
            ExitCode::from(2)
        }
    }
}
