//! Torsional contact: the torque-twist relation for axisymmetric contact and
//! the rod-model correction for the bulk compliance of a small indenter.

use crate::contact::coefficients::DerivedCoefficients;
use crate::error::{Error, Result};

/// Additional twist ratio of an indented sphere modelled as an equivalent
/// rod: `32/(3 pi) (1 - b)(2b - b^2)^1.5 (1 + b)^3` with `b = dh/R2`.
pub fn rod_correction(beta: f64) -> Result<f64> {
    if !beta.is_finite() || !(0.0..1.0).contains(&beta) {
        return Err(Error::Domain(format!(
            "beta must lie in [0, 1), got {beta}"
        )));
    }
    let base = 32.0 / (3.0 * std::f64::consts::PI);
    Ok(base * (1.0 - beta) * (2.0 * beta - beta * beta).powf(1.5) * (1.0 + beta).powi(3))
}

/// Equivalent contact radius under indentation depth `dh`:
/// `a = (1 + dh/R2) sqrt(R2^2 - (R2 - dh)^2)`.
pub fn equivalent_contact_radius(delta_h: f64, r2: f64) -> Result<f64> {
    if !r2.is_finite() || r2 <= 0.0 {
        return Err(Error::Domain(format!(
            "indenter radius must be positive, got {r2}"
        )));
    }
    if !delta_h.is_finite() || delta_h < 0.0 || delta_h >= r2 {
        return Err(Error::Domain(format!(
            "indentation depth must lie in [0, R2), got {delta_h} with R2 = {r2}"
        )));
    }
    let rest = r2 - delta_h;
    Ok((1.0 + delta_h / r2) * (r2 * r2 - rest * rest).sqrt())
}

/// Torque transmitted through an axisymmetric contact of radius `a` twisted
/// by `theta` on a body of shear modulus `g`: `M = 16 G a^3 theta / 3`.
pub fn jaeger_torque(a: f64, g: f64, theta: f64) -> Result<f64> {
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::Domain(format!(
            "contact radius must be positive, got {a}"
        )));
    }
    if !g.is_finite() || g <= 0.0 || !theta.is_finite() {
        return Err(Error::Domain(
            "shear modulus must be positive and theta finite".into(),
        ));
    }
    Ok(16.0 * g * a * a * a / 3.0 * theta)
}

/// Twist angle produced by torque `m` through a contact of radius `a`:
/// the inverse of [`jaeger_torque`].
pub fn jaeger_twist(m: f64, a: f64, g: f64) -> Result<f64> {
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::Domain(format!(
            "contact radius must be positive, got {a}"
        )));
    }
    if !g.is_finite() || g <= 0.0 || !m.is_finite() {
        return Err(Error::Domain(
            "shear modulus must be positive and torque finite".into(),
        ));
    }
    Ok(3.0 * m / (16.0 * g * a * a * a))
}

/// Theoretical twist-ratio slope `H3 = (1 + rod_correction(beta)) G1/G2`
/// relating the indenter-side to the elastomer-side rotation angle.
pub fn torsion_ratio(coeffs: &DerivedCoefficients, beta: f64) -> Result<f64> {
    Ok((1.0 + rod_correction(beta)?) * coeffs.shear_ratio)
}
