//! Calibration toolkit for soft tactile-sensor elastomers: fit Young's
//! modulus and Poisson's ratio from paired deformation measurements, generate
//! synthetic bench data, sweep indenter choices, and reconstruct distributed
//! contact forces on an elastic half-space.

mod commands;
mod config;
mod exit;
mod io;
mod record;
mod units;

use clap::{Parser, Subcommand};
use std::process::ExitCode;

use commands::{calibrate, reconstruct, sweep, synth};
use config::FileConfig;

#[derive(Parser)]
#[command(
    name = "gelcal",
    about = "Elastomer mechanical calibration and distributed-force reconstruction",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit (E1, nu1) from recorded displacement and torsion series.
    Calibrate(calibrate::CalibrateArgs),
    /// Generate synthetic sample series from a known ground truth.
    Synth(synth::SynthArgs),
    /// Tabulate calibration errors over an indenter grid.
    Sweep(sweep::SweepArgs),
    /// Reconstruct distributed tractions from a displacement field.
    Reconstruct(reconstruct::ReconstructArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file_config = match FileConfig::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.code);
        }
    };
    let result = match &cli.command {
        Command::Calibrate(args) => calibrate::run(args, &file_config),
        Command::Synth(args) => synth::run(args, &file_config),
        Command::Sweep(args) => sweep::run(args, &file_config),
        Command::Reconstruct(args) => reconstruct::run(args),
    };
    match result {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
