//! Command-line front end for sumset semigroups.

mod commands;
mod input;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input or options; exit status 1.
    #[error("{0}")]
    Invalid(String),
    /// A computed result failed a consistency check; exit status 2.
    #[error("{0}")]
    Invariant(String),
}

impl From<sumsets::Error> for CliError {
    fn from(e: sumsets::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "sumsets",
    version,
    about = "Semigroup ideals, elasticity and sumset arithmetic for finite sets of naturals"
)]
struct Cli {
    /// Input JSON file; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Binomial ideal of a semigroup given as a spec or as raw sets.
    Ideal {
        /// Include the intermediate Gröbner bases.
        #[arg(long)]
        provenance: bool,
    },
    /// Elasticity, strong reducedness and Hilbert basis data.
    Elasticity(AcceptableArgs),
    /// Whether some element attains the elasticity, with a witness binomial.
    Acceptable(AcceptableArgs),
    /// Rewrite `target^power` in the other generators.
    Express {
        /// Variable to eliminate, e.g. `z2`.
        #[arg(long)]
        target: String,
        #[arg(long)]
        power: u64,
        /// `lex` (target first) or `matrix:<file>`; defaults to a weight
        /// order ranking the target heaviest.
        #[arg(long)]
        order: Option<String>,
    },
    /// Sumset arithmetic: add, fold, grid or eval.
    Sumset,
    /// Hilbert basis of a homogeneous system `Ax = 0, x >= 0`.
    Hilbert {
        /// Solve `(A | -A)` instead of `A`.
        #[arg(long)]
        doubled: bool,
    },
    /// Cross-check an ideal against brute-force sumset relations.
    Verify {
        /// Largest word degree enumerated.
        #[arg(long, default_value_t = 4)]
        degree: u64,
    },
}

#[derive(Args)]
pub struct AcceptableArgs {
    /// Largest number of elasticity atoms combined in the fallback search.
    #[arg(long, default_value_t = 3)]
    depth: usize,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Invalid(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome =
        read_input(cli.input.as_ref()).and_then(|text| commands::run(&cli.command, &text));
    match outcome {
        Ok(out) => {
            if cli.pretty {
                print!("{}", out.text);
            } else {
                println!("{}", out.json);
            }
            match out.violation {
                Some(msg) => {
                    eprintln!("{}", serde_json::json!({ "error": msg }));
                    ExitCode::from(2)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
            ExitCode::from(match e {
                CliError::Invalid(_) => 1,
                CliError::Invariant(_) => 2,
            })
        }
    }
}
