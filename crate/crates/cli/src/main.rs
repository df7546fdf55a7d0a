//! `curvefold` command-line front end.

mod expr;
mod job;
mod run;

use clap::{Parser, Subcommand};
use curvefold::GeometryError;
use job::{Job, JobArgs};
use std::process::ExitCode;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("{0}")]
    Geometry(#[from] GeometryError),
    #[error("io: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Geometry(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "curvefold", version, about = "Developable strips, curved foldings and their isomers along space curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Strip and curved folding along a crease: OBJ, per-sample CSV, JSON summary.
    Build(JobArgs),
    /// Dual, inverse and inverse dual as OBJ files plus a JSON report.
    Isomers(JobArgs),
    /// Congruence classification of the isomer quartet.
    Classify(JobArgs),
    /// Pairwise congruence of the shift families of a closed crease.
    Census(JobArgs),
    /// Crease pattern in the plane as SVG and CSV.
    Develop(JobArgs),
    /// Torsion giving F and the reversed inverse dual equal mean curvature.
    #[command(name = "meanH", alias = "mean-h")]
    MeanH(JobArgs),
    /// Lists the built-in creases.
    Examples,
}

fn dispatch(command: Command) -> Result<(), CliError> {
    let (name, args, body): (&str, JobArgs, fn(&Job) -> Result<(), CliError>) = match command {
        Command::Build(a) => ("build", a, run::build),
        Command::Isomers(a) => ("isomers", a, run::isomers),
        Command::Classify(a) => ("classify", a, run::classify),
        Command::Census(a) => ("census", a, run::census),
        Command::Develop(a) => ("develop", a, run::develop),
        Command::MeanH(a) => ("meanH", a, run::mean_h),
        Command::Examples => {
            run::examples();
            return Ok(());
        }
    };
    body(&Job::resolve(name, &args)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
