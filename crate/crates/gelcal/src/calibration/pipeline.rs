//! The full calibration pipeline: range filter, both fits, inversion, and a
//! residual bootstrap for confidence estimates.

use rand::distributions::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::calibration::fit::{fit_normal, fit_torsion};
use crate::calibration::invert::invert_parameters_with_beta;
use crate::calibration::samples::{
    filter_range, gamma2_from_total, theta2_from_total, CalibrationDataset, DisplacementSample,
    TorsionSample,
};
use crate::error::{Error, Result};
use crate::material::Material;

/// Tunable knobs of the calibration pipeline. Defaults follow the bench
/// procedure: mid-range filter 0.2..0.8 mm, indentation ratio 0.2 during
/// torsion, 200 bootstrap resamples.
#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationConfig {
    /// Closed gamma1 acceptance interval, metres.
    pub min_gamma1: f64,
    pub max_gamma1: f64,
    /// Indentation ratio dh/R2 held during the torsion series.
    pub beta: f64,
    pub bootstrap_resamples: usize,
    pub bootstrap_seed: u64,
}

impl Default for CalibrationConfig {
    fn default() -> Self {
        Self {
            min_gamma1: 0.2e-3,
            max_gamma1: 0.8e-3,
            beta: 0.2,
            bootstrap_resamples: 200,
            bootstrap_seed: 0x67656c,
        }
    }
}

/// Calibrated elastomer parameters with fit diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationResult {
    pub h1: f64,
    /// Per sqrt(metre).
    pub h2: f64,
    pub h3: f64,
    /// Young's modulus, Pa.
    pub e1: f64,
    pub nu1: f64,
    /// Metres.
    pub rms_residual_normal: f64,
    /// Radians.
    pub rms_residual_torsion: f64,
    pub n_normal: usize,
    pub n_torsion: usize,
    /// Bootstrap standard deviations of (E1, nu1).
    pub e1_stddev: f64,
    pub nu1_stddev: f64,
    pub warnings: Vec<String>,
}

/// Runs the three-step calibration on a dataset.
///
/// Errors are attributed to the failing step so a bench operator knows
/// whether to re-record displacements or rotations.
pub fn calibrate(
    dataset: &CalibrationDataset,
    indenter: Material,
    config: &CalibrationConfig,
) -> Result<CalibrationResult> {
    let mut warnings = dataset.validate()?;

    let filtered = filter_range(&dataset.normal_samples, config.min_gamma1, config.max_gamma1)?;
    let normal = fit_normal(&filtered).map_err(|e| attribute(e, "normal fit"))?;
    let torsion =
        fit_torsion(&dataset.torsion_samples).map_err(|e| attribute(e, "torsion fit"))?;
    let inverted = invert_parameters_with_beta(normal.h1, torsion.h3, indenter, config.beta)
        .map_err(|e| attribute(e, "inversion"))?;
    warnings.extend(inverted.warnings.iter().cloned());

    let (e1_stddev, nu1_stddev) = bootstrap_confidence(
        &filtered,
        &dataset.torsion_samples,
        normal.h1,
        normal.h2,
        torsion.h3,
        indenter,
        config,
    );

    Ok(CalibrationResult {
        h1: normal.h1,
        h2: normal.h2,
        h3: torsion.h3,
        e1: inverted.e1,
        nu1: inverted.nu1,
        rms_residual_normal: normal.rms_residual,
        rms_residual_torsion: torsion.rms_residual,
        n_normal: normal.n_samples,
        n_torsion: torsion.n_samples,
        e1_stddev,
        nu1_stddev,
        warnings,
    })
}

fn attribute(e: Error, step: &str) -> Error {
    match e {
        Error::DegenerateDesign(msg) => Error::DegenerateDesign(format!("{step}: {msg}")),
        Error::Domain(msg) => Error::Domain(format!("{step}: {msg}")),
        other => other,
    }
}

/// Residual bootstrap: resample fit residuals with replacement, rebuild
/// synthetic responses around the fitted models, refit, and invert. The
/// spread of the resampled (E1, nu1) estimates is the confidence measure.
#[allow(clippy::too_many_arguments)]
fn bootstrap_confidence(
    normal: &[DisplacementSample],
    torsion: &[TorsionSample],
    h1: f64,
    h2: f64,
    h3: f64,
    indenter: Material,
    config: &CalibrationConfig,
) -> (f64, f64) {
    if config.bootstrap_resamples == 0 {
        return (0.0, 0.0);
    }
    let normal_fitted: Vec<f64> = normal
        .iter()
        .map(|s| h1 * s.gamma1 + h2 * s.gamma1.powf(1.5))
        .collect();
    let normal_residuals: Vec<f64> = normal
        .iter()
        .zip(&normal_fitted)
        .map(|(s, fit)| gamma2_from_total(s).unwrap_or(0.0) - fit)
        .collect();
    let torsion_fitted: Vec<f64> = torsion.iter().map(|s| h3 * s.theta1).collect();
    let torsion_residuals: Vec<f64> = torsion
        .iter()
        .zip(&torsion_fitted)
        .map(|(s, fit)| theta2_from_total(s) - fit)
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(config.bootstrap_seed);
    let normal_idx = rand::distributions::Uniform::new(0, normal_residuals.len());
    let torsion_idx = rand::distributions::Uniform::new(0, torsion_residuals.len());

    let mut e1_samples = Vec::with_capacity(config.bootstrap_resamples);
    let mut nu1_samples = Vec::with_capacity(config.bootstrap_resamples);
    for _ in 0..config.bootstrap_resamples {
        let resampled_normal: Vec<DisplacementSample> = normal
            .iter()
            .zip(&normal_fitted)
            .map(|(s, fit)| {
                let g2 = (fit + normal_residuals[normal_idx.sample(&mut rng)]).max(0.0);
                DisplacementSample {
                    total_displacement: s.gamma1 + g2,
                    gamma1: s.gamma1,
                }
            })
            .collect();
        let resampled_torsion: Vec<TorsionSample> = torsion
            .iter()
            .zip(&torsion_fitted)
            .map(|(s, fit)| {
                let t2 = fit + torsion_residuals[torsion_idx.sample(&mut rng)];
                TorsionSample {
                    total_angle: s.theta1 + t2,
                    theta1: s.theta1,
                }
            })
            .collect();
        let Ok(nf) = fit_normal(&resampled_normal) else {
            continue;
        };
        let Ok(tf) = fit_torsion(&resampled_torsion) else {
            continue;
        };
        let Ok(inv) = invert_parameters_with_beta(nf.h1, tf.h3, indenter, config.beta) else {
            continue;
        };
        e1_samples.push(inv.e1);
        nu1_samples.push(inv.nu1);
    }
    (stddev(&e1_samples), stddev(&nu1_samples))
}

fn stddev(values: &[f64]) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    var.sqrt()
}
