//! `reeder`: count, list and check equivalence classes of labelings of
//! Dynkin-type diagrams.
//!
//! A target is either a path to a diagram file or a family string:
//!
//! ```text
//! target  := FILE | NAME [":" PARAM] [":ends=" ("1" | "2")]
//! NAME    := A | affA | B | affB | C | affC | D | affD | E6 | E7 | E8
//!          | affE6 | affE7 | affE8 | F4 | affF4 | G2 | affG2 | X | A2_2
//!          | Y | Z | E6_2 | D4_3 | flower | Abox_m | Abox_1m | Bbox_1
//!          | Dbox_1 | Abox | Bbox | Dbox
//! ```
//!
//! Names are case-insensitive and the parameter may be omitted for the
//! fixed-size diagrams. `Abox:M:ends=2` is the path boxed at both ends.
//!
//! Exit codes: 0 success, 2 unreadable input, 3 mismatch or failed check,
//! 4 resource limit exceeded.

mod commands;
mod error;
mod target;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "reeder", version, about = "Equivalence classes of labelings on Dynkin-type diagrams")]
struct Cli {
    /// Largest number of free vertices to enumerate.
    #[arg(long, global = true, env = "REEDER_MAX_VERTICES", default_value_t = reeder_core::DEFAULT_CAP)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count classes by enumeration.
    Count {
        target: String,
        /// Also evaluate the closed form and compare.
        #[arg(long)]
        formula: bool,
    },
    /// List the classes.
    Classes {
        target: String,
        /// Check the canonical representative list against the classes.
        #[arg(long)]
        reps: bool,
        /// List every member of every class.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare closed forms with enumeration over a parameter range.
    Census {
        #[arg(long)]
        family: String,
        /// Inclusive range `a..b` (or `a..=b`, or a single value).
        #[arg(long)]
        range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here instead of stdout.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
    /// Run every check that applies to the diagram.
    Verify { target: String },
    /// Compare the classes with the orbits of the sigma game.
    Duality { target: String },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cap = cli.max_vertices;
    match cli.command {
        Command::Count { target, formula } => commands::count(&target::resolve(&target)?, formula, cap),
        Command::Classes {
            target,
            reps,
            full,
            format,
        } => commands::classes(&target::resolve(&target)?, reps, full, format, cap),
        Command::Census {
            family,
            range,
            format,
            output,
        } => commands::census(&family, &range, format, output.as_deref(), cap),
        Command::Verify { target } => commands::verify(&target::resolve(&target)?, cap),
        Command::Duality { target } => commands::duality(&target::resolve(&target)?, cap),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
