//! Calibration of the elastomer's elastic constants from recorded
//! displacement and rotation series.
//!
//! The pipeline mirrors the three-step bench procedure: fit the normal
//! displacement ratio (H1), fit the torsion twist ratio (H3), and invert the
//! two slopes to (E1, nu1) given the indenter's known constants.

mod fit;
mod invert;
mod pipeline;
mod samples;

pub use fit::{fit_normal, fit_torsion, NormalFit, TorsionFit};
pub use invert::{invert_parameters, invert_parameters_with_beta, InvertedParameters};
pub use pipeline::{calibrate, CalibrationConfig, CalibrationResult};
pub use samples::{
    aggregate_repeats, filter_range, gamma2_from_total, theta2_from_total, CalibrationDataset,
    DisplacementSample, TorsionSample,
};
