//! `argn`: compute labellings, models, reductions and two-world validity
//! from the command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Failure;

#[derive(Parser)]
#[command(
    name = "argn",
    version,
    about = "Argumentation networks as theories of classical logic with strong negation"
)]
struct Cli {
    /// Print machine-readable JSON instead of tables
    #[arg(long, global = true)]
    json: bool,

    /// Largest atom or argument count any search may handle
    #[arg(long, global = true, value_name = "N")]
    max_atoms: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Labellings and extensions of a network
    Extensions(ExtensionsArgs),
    /// Models of the network's theory
    Models(ModelsArgs),
    /// Reduce joint attacks to single attacks, or higher-level attacks to joint attacks
    Reduce(ReduceArgs),
    /// Validity, countermodels and N-normalization for the two-world logic
    Cnn(CnnArgs),
    /// Whether the network's theory entails a formula
    Entails(EntailsArgs),
    /// Cross-check the logic pipeline against the oracles on random networks
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Network file
    #[arg(long, short)]
    input: PathBuf,

    /// File format; inferred from the extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Apx,
    Tgf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Complete,
    Grounded,
    Stable,
    Preferred,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Cn,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Support {
    /// Support `x => y` as `x -> y`
    Tau1,
    /// Support `x => y` as `x -> ~N y`
    Tau2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    Joint,
    Higher,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CnnAction {
    Valid,
    Countermodel,
    Normalize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Worlds {
    World1,
    Both,
}

#[derive(Args)]
struct ExtensionsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "complete")]
    semantics: Semantics,
    #[arg(long, value_enum, default_value = "both")]
    engine: Engine,
}

#[derive(Args)]
struct ModelsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Reading of support arcs in bipolar networks
    #[arg(long, value_enum, default_value = "tau1")]
    support: Support,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    kind: ReduceKind,
    /// Write the provenance of fresh nodes to this JSON file
    #[arg(long, value_name = "PATH")]
    provenance: Option<PathBuf>,
}

#[derive(Args)]
struct CnnArgs {
    /// Formula to check, e.g. "N N p <-> p"
    #[arg(long)]
    formula: String,
    #[arg(long, value_enum, default_value = "valid")]
    action: CnnAction,
    #[arg(long, value_enum, default_value = "both")]
    worlds: Worlds,
}

#[derive(Args)]
struct EntailsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long)]
    formula: String,
    #[arg(long, value_enum, default_value = "tau1")]
    support: Support,
}

#[derive(Args)]
struct FuzzArgs {
    /// Seed for the network generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of networks per family
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Largest number of arguments per network
    #[arg(long, default_value_t = 6)]
    max_args: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context::new(cli.json, cli.max_atoms);
    let result = match cli.command {
        Command::Extensions(a) => {
            ctx.extensions(&a.input.input, a.input.format, a.semantics, a.engine)
        }
        Command::Models(a) => ctx.models(&a.input.input, a.input.format, a.support),
        Command::Reduce(a) => ctx.reduce(
            &a.input.input,
            a.input.format,
            a.kind,
            a.provenance.as_deref(),
        ),
        Command::Cnn(a) => ctx.cnn(&a.formula, a.action, a.worlds),
        Command::Entails(a) => ctx.entails(&a.input.input, a.input.format, &a.formula, a.support),
        Command::Fuzz(a) => ctx.fuzz(a.seed, a.count, a.max_args),
    };
    match result {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(Failure::Divergence(output)) => {
            print!("{output}");
            eprintln!("error: the logic pipeline and the oracle disagree");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
