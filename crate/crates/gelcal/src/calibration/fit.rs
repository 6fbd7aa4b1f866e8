//! Least-squares fits of the two calibration relations.

use crate::calibration::samples::{
    gamma2_from_total, theta2_from_total, DisplacementSample, TorsionSample,
};
use crate::error::{Error, Result};

/// Result of fitting `gamma2 = H1 gamma1 + H2 gamma1^1.5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalFit {
    pub h1: f64,
    /// Per sqrt(metre).
    pub h2: f64,
    /// Root-mean-square residual in metres.
    pub rms_residual: f64,
    pub n_samples: usize,
}

/// Result of fitting `theta2 = H3 theta1` through the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorsionFit {
    pub h3: f64,
    /// Root-mean-square residual in radians.
    pub rms_residual: f64,
    pub n_samples: usize,
}

/// Ordinary least squares over the basis `{gamma1, gamma1^1.5}` with the
/// indenter displacement as response.
///
/// The design is normalised by the largest gamma1 before solving, which
/// keeps the 2x2 normal equations well conditioned at millimetre scales.
pub fn fit_normal(samples: &[DisplacementSample]) -> Result<NormalFit> {
    if samples.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: samples.len(),
        });
    }
    let mut xs = Vec::with_capacity(samples.len());
    let mut ys = Vec::with_capacity(samples.len());
    for (index, s) in samples.iter().enumerate() {
        let g2 = gamma2_from_total(s).map_err(|_| Error::InconsistentSample {
            index,
            total: s.total_displacement,
            measured: s.gamma1,
        })?;
        xs.push(s.gamma1);
        ys.push(g2);
    }
    let scale = xs.iter().cloned().fold(0.0_f64, f64::max);
    if scale <= 0.0 {
        return Err(Error::DegenerateDesign(
            "all gamma1 values are zero".into(),
        ));
    }

    // Normal equations for the scaled basis u = g1/s, v = (g1/s)^1.5.
    let (mut suu, mut suv, mut svv, mut suy, mut svy) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(&ys) {
        let u = x / scale;
        let v = u.powf(1.5);
        suu += u * u;
        suv += u * v;
        svv += v * v;
        suy += u * y;
        svy += v * y;
    }
    let det = suu * svv - suv * suv;
    if det <= f64::EPSILON * suu * svv || !det.is_finite() {
        return Err(Error::DegenerateDesign(format!(
            "design matrix is rank deficient (det = {det:.3e}); \
             gamma1 values must be distinct"
        )));
    }
    let cu = (svv * suy - suv * svy) / det;
    let cv = (suu * svy - suv * suy) / det;
    let h1 = cu / scale;
    let h2 = cv / scale.powf(1.5);

    let mut ss = 0.0;
    for (&x, &y) in xs.iter().zip(&ys) {
        let fit = h1 * x + h2 * x.powf(1.5);
        ss += (y - fit) * (y - fit);
    }
    Ok(NormalFit {
        h1,
        h2,
        rms_residual: (ss / samples.len() as f64).sqrt(),
        n_samples: samples.len(),
    })
}

/// Slope through the origin `H3 = sum(theta1 theta2) / sum(theta1^2)`.
pub fn fit_torsion(samples: &[TorsionSample]) -> Result<TorsionFit> {
    let usable = samples.iter().filter(|s| s.theta1 != 0.0).count();
    if usable < 2 {
        if samples.len() >= 2 {
            return Err(Error::DegenerateDesign(
                "torsion fit needs at least 2 samples with theta1 != 0".into(),
            ));
        }
        return Err(Error::InsufficientData {
            needed: 2,
            got: samples.len(),
        });
    }
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for s in samples {
        let theta2 = theta2_from_total(s);
        sxx += s.theta1 * s.theta1;
        sxy += s.theta1 * theta2;
    }
    let h3 = sxy / sxx;
    let mut ss = 0.0;
    for s in samples {
        let r = theta2_from_total(s) - h3 * s.theta1;
        ss += r * r;
    }
    Ok(TorsionFit {
        h3,
        rms_residual: (ss / samples.len() as f64).sqrt(),
        n_samples: samples.len(),
    })
}
