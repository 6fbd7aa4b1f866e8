//! Recorded calibration samples and dataset-level transformations.

use crate::error::{Error, Result};

/// One normal-contact record: the commanded total displacement from the
/// translation mount and the maximum indentation measured by the sensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisplacementSample {
    /// gamma1 + gamma2, metres.
    pub total_displacement: f64,
    /// gamma1, metres.
    pub gamma1: f64,
}

/// One torsion record: the commanded total rotation from the rotation mount
/// and the contact-surface rotation measured by the sensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorsionSample {
    /// theta1 + theta2, radians.
    pub total_angle: f64,
    /// theta1, radians.
    pub theta1: f64,
}

/// Indenter-side displacement recovered from a normal-contact sample.
pub fn gamma2_from_total(sample: &DisplacementSample) -> Result<f64> {
    let g2 = sample.total_displacement - sample.gamma1;
    if sample.gamma1 < 0.0 || g2 < 0.0 {
        return Err(Error::InconsistentSample {
            index: 0,
            total: sample.total_displacement,
            measured: sample.gamma1,
        });
    }
    Ok(g2)
}

/// Indenter-side rotation recovered from a torsion sample.
pub fn theta2_from_total(sample: &TorsionSample) -> f64 {
    sample.total_angle - sample.theta1
}

/// A full calibration run: one normal series and one torsion series.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CalibrationDataset {
    pub normal_samples: Vec<DisplacementSample>,
    pub torsion_samples: Vec<TorsionSample>,
    pub repeat_index: usize,
}

impl CalibrationDataset {
    pub fn new(
        normal_samples: Vec<DisplacementSample>,
        torsion_samples: Vec<TorsionSample>,
        repeat_index: usize,
    ) -> Self {
        Self {
            normal_samples,
            torsion_samples,
            repeat_index,
        }
    }

    /// Checks per-sample consistency.
    ///
    /// Displacement samples must satisfy `total >= gamma1 >= 0` strictly (the
    /// translation mount resolves micrometres, so a violation means corrupt
    /// data). Torsion samples whose magnitudes or signs disagree are reported
    /// as warnings only: at small angles the rotation mount's coarse
    /// resolution routinely produces `|total| < |theta1|`.
    pub fn validate(&self) -> Result<Vec<String>> {
        for (index, s) in self.normal_samples.iter().enumerate() {
            if s.gamma1 < 0.0 || s.total_displacement < s.gamma1 {
                return Err(Error::InconsistentSample {
                    index,
                    total: s.total_displacement,
                    measured: s.gamma1,
                });
            }
        }
        let mut warnings = Vec::new();
        for (index, s) in self.torsion_samples.iter().enumerate() {
            let theta2 = theta2_from_total(s);
            if s.theta1 != 0.0 && theta2 != 0.0 && theta2.signum() != s.theta1.signum() {
                warnings.push(format!(
                    "torsion sample {index}: total {:.4e} and theta1 {:.4e} imply \
                     opposite-sign theta2; kept for fitting",
                    s.total_angle, s.theta1
                ));
            }
        }
        Ok(warnings)
    }

    /// Pools several runs into one dataset by concatenation. Fitting over the
    /// pooled samples averages measurement noise the same way per-grid-point
    /// averaging would, without requiring aligned grids.
    pub fn pooled(datasets: &[CalibrationDataset]) -> Self {
        let mut out = CalibrationDataset::default();
        for d in datasets {
            out.normal_samples.extend_from_slice(&d.normal_samples);
            out.torsion_samples.extend_from_slice(&d.torsion_samples);
        }
        out
    }
}

/// Keeps the samples whose measured indentation lies in the closed interval
/// `[min_gamma1, max_gamma1]`.
///
/// Mid-range displacements are where the contact model is trustworthy: at
/// small deformation measurement noise dominates, at large deformation the
/// neglected nonlinear terms do.
pub fn filter_range(
    samples: &[DisplacementSample],
    min_gamma1: f64,
    max_gamma1: f64,
) -> Result<Vec<DisplacementSample>> {
    if !min_gamma1.is_finite() || !max_gamma1.is_finite() || min_gamma1 >= max_gamma1 {
        return Err(Error::Domain(format!(
            "range filter needs min < max, got [{min_gamma1}, {max_gamma1}]"
        )));
    }
    let kept: Vec<DisplacementSample> = samples
        .iter()
        .filter(|s| s.gamma1 >= min_gamma1 && s.gamma1 <= max_gamma1)
        .copied()
        .collect();
    if kept.len() < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            got: kept.len(),
        });
    }
    Ok(kept)
}

/// Averages repeated runs taken on the same commanded grid.
///
/// Samples are matched by their commanded totals (1 um for displacement,
/// 0.01 rad for rotation) after sorting; the measured gamma1/theta1 values
/// are averaged per grid point and the first run's totals kept.
pub fn aggregate_repeats(datasets: &[CalibrationDataset]) -> Result<CalibrationDataset> {
    const DISP_TOL: f64 = 1.0e-6;
    const ANGLE_TOL: f64 = 0.01;

    let first = datasets
        .first()
        .ok_or(Error::InsufficientData { needed: 1, got: 0 })?;
    if datasets.len() == 1 {
        return Ok(first.clone());
    }

    let sort_normal = |d: &CalibrationDataset| {
        let mut v = d.normal_samples.clone();
        v.sort_by(|a, b| a.total_displacement.total_cmp(&b.total_displacement));
        v
    };
    let sort_torsion = |d: &CalibrationDataset| {
        let mut v = d.torsion_samples.clone();
        v.sort_by(|a, b| a.total_angle.total_cmp(&b.total_angle));
        v
    };

    let base_normal = sort_normal(first);
    let base_torsion = sort_torsion(first);
    let mut gamma1_sums: Vec<f64> = base_normal.iter().map(|s| s.gamma1).collect();
    let mut theta1_sums: Vec<f64> = base_torsion.iter().map(|s| s.theta1).collect();

    for (run, d) in datasets.iter().enumerate().skip(1) {
        let normal = sort_normal(d);
        let torsion = sort_torsion(d);
        if normal.len() != base_normal.len() || torsion.len() != base_torsion.len() {
            return Err(Error::Alignment(format!(
                "run {run} has {} normal / {} torsion samples, expected {} / {}",
                normal.len(),
                torsion.len(),
                base_normal.len(),
                base_torsion.len()
            )));
        }
        let mut mismatches = Vec::new();
        for (i, (a, b)) in base_normal.iter().zip(&normal).enumerate() {
            if (a.total_displacement - b.total_displacement).abs() > DISP_TOL {
                mismatches.push(format!(
                    "normal point {i}: {:.6e} vs {:.6e} m",
                    a.total_displacement, b.total_displacement
                ));
            } else {
                gamma1_sums[i] += b.gamma1;
            }
        }
        for (i, (a, b)) in base_torsion.iter().zip(&torsion).enumerate() {
            if (a.total_angle - b.total_angle).abs() > ANGLE_TOL {
                mismatches.push(format!(
                    "torsion point {i}: {:.6e} vs {:.6e} rad",
                    a.total_angle, b.total_angle
                ));
            } else {
                theta1_sums[i] += b.theta1;
            }
        }
        if !mismatches.is_empty() {
            return Err(Error::Alignment(format!(
                "run {run} does not share the commanded grid: {}",
                mismatches.join("; ")
            )));
        }
    }

    let n = datasets.len() as f64;
    Ok(CalibrationDataset {
        normal_samples: base_normal
            .iter()
            .zip(&gamma1_sums)
            .map(|(s, sum)| DisplacementSample {
                total_displacement: s.total_displacement,
                gamma1: sum / n,
            })
            .collect(),
        torsion_samples: base_torsion
            .iter()
            .zip(&theta1_sums)
            .map(|(s, sum)| TorsionSample {
                total_angle: s.total_angle,
                theta1: sum / n,
            })
            .collect(),
        repeat_index: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma2_subtraction() {
        let s = DisplacementSample {
            total_displacement: 0.9e-3,
            gamma1: 0.6e-3,
        };
        assert_relative_eq!(gamma2_from_total(&s).unwrap(), 0.3e-3, max_relative = 1e-12);
        // Rigid-indenter limit.
        let s = DisplacementSample {
            total_displacement: 0.6e-3,
            gamma1: 0.6e-3,
        };
        assert_eq!(gamma2_from_total(&s).unwrap(), 0.0);
        // Violated invariant.
        let s = DisplacementSample {
            total_displacement: 0.5e-3,
            gamma1: 0.6e-3,
        };
        assert!(gamma2_from_total(&s).is_err());
    }

    #[test]
    fn validate_names_bad_index() {
        let d = CalibrationDataset::new(
            vec![
                DisplacementSample {
                    total_displacement: 1.0e-3,
                    gamma1: 0.5e-3,
                },
                DisplacementSample {
                    total_displacement: 0.4e-3,
                    gamma1: 0.5e-3,
                },
            ],
            vec![],
            0,
        );
        match d.validate() {
            Err(Error::InconsistentSample { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected inconsistent sample, got {other:?}"),
        }
    }

    fn mm(g1: f64) -> DisplacementSample {
        DisplacementSample {
            total_displacement: 2.0 * g1 * 1e-3,
            gamma1: g1 * 1e-3,
        }
    }

    #[test]
    fn filter_keeps_closed_interval() {
        let samples = vec![mm(0.2), mm(0.5), mm(0.8)];
        let kept = filter_range(&samples, 0.2e-3, 0.8e-3).unwrap();
        assert_eq!(kept.len(), 3);
    }

    #[test]
    fn filter_insufficient_survivors() {
        let samples = vec![mm(0.1), mm(0.3), mm(0.5), mm(0.9)];
        match filter_range(&samples, 0.2e-3, 0.8e-3) {
            Err(Error::InsufficientData { needed: 3, got: 2 }) => {}
            other => panic!("expected insufficient data, got {other:?}"),
        }
        assert!(filter_range(&[], 0.2e-3, 0.8e-3).is_err());
        assert!(filter_range(&samples, 0.8e-3, 0.2e-3).is_err());
    }

    #[test]
    fn aggregate_identity_and_mean() {
        let d1 = CalibrationDataset::new(
            vec![
                DisplacementSample {
                    total_displacement: 1.0e-3,
                    gamma1: 0.4e-3,
                },
                DisplacementSample {
                    total_displacement: 2.0e-3,
                    gamma1: 0.6e-3,
                },
            ],
            vec![],
            0,
        );
        let same = aggregate_repeats(std::slice::from_ref(&d1)).unwrap();
        assert_eq!(same, d1);

        let d2 = CalibrationDataset::new(
            vec![
                DisplacementSample {
                    total_displacement: 1.0e-3,
                    gamma1: 0.5e-3,
                },
                DisplacementSample {
                    total_displacement: 2.0e-3,
                    gamma1: 0.7e-3,
                },
            ],
            vec![],
            1,
        );
        let avg = aggregate_repeats(&[d1, d2]).unwrap();
        assert_relative_eq!(avg.normal_samples[0].gamma1, 0.45e-3, max_relative = 1e-12);
        assert_relative_eq!(avg.normal_samples[1].gamma1, 0.65e-3, max_relative = 1e-12);
    }

    #[test]
    fn aggregate_rejects_disjoint_grids() {
        let d1 = CalibrationDataset::new(
            vec![DisplacementSample {
                total_displacement: 1.0e-3,
                gamma1: 0.4e-3,
            }],
            vec![],
            0,
        );
        let d2 = CalibrationDataset::new(
            vec![DisplacementSample {
                total_displacement: 1.5e-3,
                gamma1: 0.5e-3,
            }],
            vec![],
            1,
        );
        assert!(matches!(
            aggregate_repeats(&[d1, d2]),
            Err(Error::Alignment(_))
        ));
    }
}
