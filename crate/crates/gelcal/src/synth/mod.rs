//! Synthetic-experiment generation and calibration-error sweeps.
//!
//! The forward contact models stand in for a physical bench: series of
//! (total, measured) samples are produced from a known ground truth, pushed
//! through the calibration pipeline, and compared back. Every generator is
//! deterministic under its seed.

mod generate;
mod report;
mod sweep;

pub use generate::{
    generate_normal_series, generate_torsion_series, NoiseModel, NormalModel,
};
pub use report::{series_vs_exact_report, SeriesErrorRow};
pub use sweep::{run_sweep, split_seed, SweepConfig, SweepOutcome, SweepReport, SweepRow};
