//! Forward contact models: Hertz/Tatara normal contact with the Yoffe
//! transverse-displacement correction, and torsional contact with the
//! rod-model correction for a small elastic indenter.

mod coefficients;
mod normal;
mod state;
mod torsion;

pub use coefficients::{derive_coefficients, CoefficientWarning, DerivedCoefficients};
pub use normal::{
    hertz_gamma, numeric_origin_slope, series_gamma2, solve_gamma2_exact, tatara_dominance_ratio,
    tatara_gamma, yoffe_model_gamma2, Body, SeriesCoefficients, SeriesOrder,
};
pub use state::{NormalContactState, TorsionState};
pub use torsion::{
    equivalent_contact_radius, jaeger_torque, jaeger_twist, rod_correction, torsion_ratio,
};

/// Yoffe correction factor 32/(9 pi) applied to the indenter-side
/// displacement coefficient.
pub const YOFFE_FACTOR: f64 = 32.0 / (9.0 * std::f64::consts::PI);
