//! Snapshot types bundling the state of one contact configuration.

use crate::contact::coefficients::DerivedCoefficients;
use crate::contact::torsion::{jaeger_torque, rod_correction};
use crate::error::{Error, Result};

/// State of a normal contact at a given contact radius: both bodies'
/// maximum displacements, the load carried, and the indentation ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalContactState {
    /// Contact radius, m.
    pub contact_radius: f64,
    /// Elastomer maximum normal displacement, m.
    pub gamma1: f64,
    /// Indenter maximum normal displacement, m.
    pub gamma2: f64,
    /// Normal load, N.
    pub force: f64,
    /// Mutual approach gamma1 + gamma2, m.
    pub indentation_depth: f64,
    /// indentation_depth / R2.
    pub beta: f64,
}

impl NormalContactState {
    /// Evaluates the corrected displacement model at contact radius `a`:
    /// `gamma_i = A_i a^2 - B_i a^3` with the Hertz load
    /// `F = 4 E* a^3 / (3 R*)`.
    pub fn from_contact_radius(
        a: f64,
        coeffs: &DerivedCoefficients,
        indenter_radius: f64,
    ) -> Result<Self> {
        if !a.is_finite() || a < 0.0 {
            return Err(Error::Domain(format!(
                "contact radius must be nonnegative, got {a}"
            )));
        }
        if !indenter_radius.is_finite() || indenter_radius <= 0.0 {
            return Err(Error::Domain(format!(
                "indenter radius must be positive, got {indenter_radius}"
            )));
        }
        let gamma1 = coeffs.a1 * a * a - coeffs.b1 * a * a * a;
        let gamma2 = coeffs.a2 * a * a - coeffs.b2 * a * a * a;
        if gamma1 < 0.0 || gamma2 < 0.0 {
            return Err(Error::Domain(format!(
                "contact radius {a} is beyond the model's validity range \
                 (negative displacement)"
            )));
        }
        let force = if coeffs.e_star.is_finite() {
            4.0 * coeffs.e_star * a * a * a / (3.0 * coeffs.r_star)
        } else {
            f64::NAN
        };
        let indentation_depth = gamma1 + gamma2;
        let beta = indentation_depth / indenter_radius;
        if beta >= 1.0 {
            return Err(Error::Domain(format!(
                "indentation ratio {beta} out of range: sphere swallowed"
            )));
        }
        Ok(Self {
            contact_radius: a,
            gamma1,
            gamma2,
            force,
            indentation_depth,
            beta,
        })
    }
}

/// State of a torsional contact driven by the stick-region rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorsionState {
    /// Torque through the contact, N m.
    pub torque: f64,
    /// Rotation of the contact surface relative to the elastomer, rad.
    pub theta1: f64,
    /// Rotation relative to the indenter (rod-corrected), rad.
    pub theta2: f64,
    /// theta1 + theta2, rad.
    pub theta_total: f64,
    /// Stick-region rotation input, rad.
    pub theta_stick: f64,
    /// 1 + additional-twist ratio of the indented sphere; at least 1.
    pub correction_factor: f64,
}

impl TorsionState {
    /// Builds the torsion state from a measured stick-region rotation,
    /// which the contact surface follows on the elastomer side.
    pub fn from_stick_rotation(
        theta_stick: f64,
        coeffs: &DerivedCoefficients,
        beta: f64,
        contact_radius: f64,
        elastomer_shear_modulus: f64,
    ) -> Result<Self> {
        if !theta_stick.is_finite() {
            return Err(Error::Domain("stick rotation must be finite".into()));
        }
        let correction_factor = 1.0 + rod_correction(beta)?;
        let theta1 = theta_stick;
        let theta2 = correction_factor * coeffs.shear_ratio * theta1;
        let torque = jaeger_torque(contact_radius, elastomer_shear_modulus, theta1)?;
        Ok(Self {
            torque,
            theta1,
            theta2,
            theta_total: theta1 + theta2,
            theta_stick,
            correction_factor,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::derive_coefficients;
    use crate::material::{ContactGeometry, Material};
    use approx::assert_relative_eq;

    fn coeffs() -> DerivedCoefficients {
        derive_coefficients(
            Material::from_mpa(1.0, 0.48).unwrap(),
            Material::from_mpa(2.0, 0.4).unwrap(),
            ContactGeometry::from_mm(150.0, 5.0).unwrap(),
            0.2,
        )
        .unwrap()
    }

    #[test]
    fn zero_contact_zero_everything() {
        let s = NormalContactState::from_contact_radius(0.0, &coeffs(), 5.0e-3).unwrap();
        assert_eq!(s.gamma1, 0.0);
        assert_eq!(s.gamma2, 0.0);
        assert_eq!(s.force, 0.0);
        assert_eq!(s.beta, 0.0);
    }

    #[test]
    fn displacements_positive_and_consistent() {
        let c = coeffs();
        let s = NormalContactState::from_contact_radius(1.5e-3, &c, 5.0e-3).unwrap();
        assert!(s.gamma1 > 0.0 && s.gamma2 > 0.0);
        assert!(s.beta > 0.0 && s.beta < 1.0);
        assert_relative_eq!(
            s.indentation_depth,
            s.gamma1 + s.gamma2,
            max_relative = 1e-15
        );
        // The exact-root solve inverts the same parametric relation.
        let g2 = crate::contact::solve_gamma2_exact(s.gamma1, &c).unwrap();
        // Both branches of the squared relation satisfy it; the parametric
        // state lies on the lower one, so only the residual is checked here.
        let lhs = c.c * (c.b2 * s.gamma1 - c.b1 * g2).powi(3);
        let rhs = (c.a2 * s.gamma1 - c.a1 * g2).powi(2);
        assert_relative_eq!(lhs, rhs, max_relative = 1e-6);
    }

    #[test]
    fn torsion_state_consistency() {
        let c = coeffs();
        let g1 = Material::from_mpa(1.0, 0.48).unwrap().shear_modulus();
        let s = TorsionState::from_stick_rotation(0.1, &c, 0.2, 3.6e-3, g1).unwrap();
        assert_relative_eq!(s.theta_total, s.theta1 + s.theta2, max_relative = 1e-15);
        assert!(s.correction_factor >= 1.0);
        assert!((s.correction_factor - 2.014).abs() < 1e-3);
        assert_relative_eq!(s.theta2, c.h3_theory * s.theta1, max_relative = 1e-12);
        assert!(s.torque > 0.0);
    }
}
