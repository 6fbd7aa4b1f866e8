//! Sample-series generators backed by the forward contact models.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::calibration::{DisplacementSample, TorsionSample};
use crate::contact::{
    solve_gamma2_exact, torsion_ratio, yoffe_model_gamma2, DerivedCoefficients,
};
use crate::error::{Error, Result};

/// Zero-mean Gaussian measurement noise on the commanded totals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    /// Standard deviation of the total-displacement reading, metres.
    pub sigma_disp: f64,
    /// Standard deviation of the total-angle reading, radians.
    pub sigma_angle: f64,
}

impl NoiseModel {
    pub const NONE: NoiseModel = NoiseModel {
        sigma_disp: 0.0,
        sigma_angle: 0.0,
    };

    pub fn new(sigma_disp: f64, sigma_angle: f64) -> Result<Self> {
        if sigma_disp < 0.0 || sigma_angle < 0.0 {
            return Err(Error::Domain("noise sigmas must be nonnegative".into()));
        }
        Ok(Self {
            sigma_disp,
            sigma_angle,
        })
    }
}

/// Which forward model supplies the ground-truth indenter displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormalModel {
    /// Root of the implicit relation with the transverse-displacement
    /// (Yoffe) correction folded into the indenter coefficient: the full
    /// semi-analytic model, and the default bench stand-in.
    #[default]
    YoffeExact,
    /// Root of the uncorrected implicit relation.
    TataraExact,
    /// The two-coefficient fit form at its theoretical values; exact closure
    /// for the calibration fit, useful for isolating noise effects.
    FitForm,
}

/// Generates a normal-contact series: for each gamma1 the model's gamma2 is
/// added to the commanded total, plus measurement noise.
pub fn generate_normal_series(
    coeffs: &DerivedCoefficients,
    gamma1_grid: &[f64],
    noise: NoiseModel,
    seed: u64,
    model: NormalModel,
) -> Result<Vec<DisplacementSample>> {
    if gamma1_grid.is_empty() {
        return Err(Error::InsufficientData { needed: 1, got: 0 });
    }
    let corrected = if model == NormalModel::YoffeExact {
        Some(coeffs.yoffe_corrected()?)
    } else {
        None
    };
    let gamma2 = |g1: f64| -> Result<f64> {
        match model {
            NormalModel::TataraExact => solve_gamma2_exact(g1, coeffs),
            NormalModel::YoffeExact => solve_gamma2_exact(g1, corrected.as_ref().unwrap()),
            NormalModel::FitForm => {
                let h2 = coeffs.h2_theory.ok_or_else(|| {
                    Error::Domain(
                        "fit-form generator needs a defined h2_theory \
                         (K2 <= 0 for this pair)"
                            .into(),
                    )
                })?;
                yoffe_model_gamma2(g1, coeffs.h1_theory, h2)
            }
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Normal::new(0.0, noise.sigma_disp.max(f64::MIN_POSITIVE))
        .map_err(|e| Error::Domain(e.to_string()))?;
    let mut out = Vec::with_capacity(gamma1_grid.len());
    for &g1 in gamma1_grid {
        let g2 = gamma2(g1)?;
        let eps = if noise.sigma_disp > 0.0 {
            dist.sample(&mut rng)
        } else {
            0.0
        };
        // The mount cannot read less than the sensor-side indentation.
        let total = (g1 + g2 + eps).max(g1);
        out.push(DisplacementSample {
            total_displacement: total,
            gamma1: g1,
        });
    }
    Ok(out)
}

/// Generates a torsion series from the theoretical twist ratio at `beta`.
pub fn generate_torsion_series(
    coeffs: &DerivedCoefficients,
    beta: f64,
    theta1_grid: &[f64],
    noise: NoiseModel,
    seed: u64,
) -> Result<Vec<TorsionSample>> {
    if theta1_grid.is_empty() {
        return Err(Error::InsufficientData { needed: 1, got: 0 });
    }
    let h3 = torsion_ratio(coeffs, beta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dist = Normal::new(0.0, noise.sigma_angle.max(f64::MIN_POSITIVE))
        .map_err(|e| Error::Domain(e.to_string()))?;
    let mut out = Vec::with_capacity(theta1_grid.len());
    for &t1 in theta1_grid {
        let eps = if noise.sigma_angle > 0.0 {
            dist.sample(&mut rng)
        } else {
            0.0
        };
        out.push(TorsionSample {
            total_angle: t1 * (1.0 + h3) + eps,
            theta1: t1,
        });
    }
    Ok(out)
}
