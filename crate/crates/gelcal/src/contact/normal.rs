//! Normal contact: Hertz displacements, the finite-size (Tatara) correction,
//! the implicit displacement relation between the two bodies, and its series
//! and fit-form approximations.

use crate::contact::coefficients::DerivedCoefficients;
use crate::error::{Error, Result};
use crate::material::Material;
use crate::rootfind::bisect_secant;

/// Which body a per-body quantity refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Body {
    Elastomer,
    Indenter,
}

/// Hertz maximum surface displacement `gamma_i = A_i a^2` at contact radius `a`.
pub fn hertz_gamma(a: f64, coeffs: &DerivedCoefficients, body: Body) -> Result<f64> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::Domain(format!(
            "contact radius must be nonnegative, got {a}"
        )));
    }
    let coeff = match body {
        Body::Elastomer => coeffs.a1,
        Body::Indenter => coeffs.a2,
    };
    Ok(coeff * a * a)
}

/// Maximum displacement of a finite sphere under load `f` at contact radius
/// `a`: the Hertz term minus the far-field medium displacement.
///
/// `gamma = 3 f / (4 E' a) - (1 + nu)(3 - 2 nu) f / (4 pi E R)`
pub fn tatara_gamma(f: f64, a: f64, material: Material, radius: f64) -> Result<f64> {
    if !f.is_finite() || f < 0.0 {
        return Err(Error::Domain(format!("force must be nonnegative, got {f}")));
    }
    if f == 0.0 {
        return Ok(0.0);
    }
    if a <= 0.0 {
        return Err(Error::SingularInput(format!(
            "contact radius must be positive under load, got a = {a}"
        )));
    }
    if radius <= 0.0 {
        return Err(Error::Domain(format!(
            "body radius must be positive, got {radius}"
        )));
    }
    let hertz = 3.0 * f / (4.0 * material.plane_strain_modulus() * a);
    let nu = material.poisson_ratio();
    let correction = (1.0 + nu) * (3.0 - 2.0 * nu) * f
        / (4.0 * std::f64::consts::PI * material.young_modulus() * radius);
    Ok(hertz - correction)
}

/// Ratio of the Tatara correction term to the Hertz term; values approaching
/// one signal that the operating point has left the model's validity range.
pub fn tatara_dominance_ratio(a: f64, material: Material, radius: f64) -> Result<f64> {
    if a <= 0.0 || radius <= 0.0 {
        return Err(Error::Domain(
            "contact and body radii must be positive".into(),
        ));
    }
    let nu = material.poisson_ratio();
    let hertz = 3.0 / (4.0 * material.plane_strain_modulus() * a);
    let correction = (1.0 + nu) * (3.0 - 2.0 * nu)
        / (4.0 * std::f64::consts::PI * material.young_modulus() * radius);
    Ok(correction / hertz)
}

/// Indenter displacement `gamma2` solving the implicit relation
/// `C (B2 g1 - B1 g2)^3 = (A2 g1 - A1 g2)^2` for a given elastomer
/// displacement `gamma1`.
///
/// Squaring the underlying radical relation admits two branches that meet at
/// the origin with the common slope K1 = A2/A1; the series expansion the
/// calibration model is built on corresponds to the upper branch
/// `g2 = K1 g1 + sqrt(K1 K2) g1^1.5 + ...`, so the root is bracketed on
/// `[K1 g1, g1]`, where the residual changes sign exactly once.
pub fn solve_gamma2_exact(gamma1: f64, coeffs: &DerivedCoefficients) -> Result<f64> {
    if !gamma1.is_finite() || gamma1 < 0.0 {
        return Err(Error::Domain(format!(
            "gamma1 must be nonnegative, got {gamma1}"
        )));
    }
    if gamma1 == 0.0 {
        return Ok(0.0);
    }
    let (a1, a2, b1, b2, c) = (coeffs.a1, coeffs.a2, coeffs.b1, coeffs.b2, coeffs.c);
    if !c.is_finite() {
        return Err(Error::Domain(
            "implicit-relation coefficients are undefined for this pair \
             (a1 b2 - a2 b1 <= 0)"
                .into(),
        ));
    }
    let residual = |g2: f64| {
        let lhs = b2 * gamma1 - b1 * g2;
        let rhs = a2 * gamma1 - a1 * g2;
        c * lhs * lhs * lhs - rhs * rhs
    };
    let pivot = coeffs.k1 * gamma1;
    // With the usual ordering K1 < 1 the root lies between the pivot and
    // gamma1. A softer-than-elastomer indenter puts the pivot above gamma1;
    // the bracket is then grown outward from the pivot instead.
    let hi = if coeffs.k1 < 1.0 {
        gamma1
    } else {
        let mut hi = pivot * 1.5;
        let mut steps = 0;
        while residual(hi) > 0.0 && steps < 64 {
            hi *= 1.5;
            steps += 1;
        }
        hi
    };
    // Absolute tolerance of 1e-12 of the pair's length scale; the secant
    // polish inside the solver then takes the root to machine precision.
    let atol = 1.0e-12 * coeffs.r_star.max(1.0 / a1);
    bisect_secant(residual, pivot, hi, atol, 200)
}

/// One-sided slope of `solve_gamma2_exact` at the origin.
///
/// The root behaves as `K1 h + c h^1.5` near zero, so the plain ratio
/// `g2(h)/h` converges only like sqrt(h). Evaluating at `h` and `h/4` and
/// extrapolating cancels the half-power term, leaving an O(h) error.
pub fn numeric_origin_slope(coeffs: &DerivedCoefficients, h: f64) -> Result<f64> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::Domain(format!("step must be positive, got {h}")));
    }
    let s_h = solve_gamma2_exact(h, coeffs)? / h;
    let h4 = 0.25 * h;
    let s_h4 = solve_gamma2_exact(h4, coeffs)? / h4;
    Ok(2.0 * s_h4 - s_h)
}

/// Truncation order of the series solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOrder {
    /// `K1 g1 + sqrt(K1 K2) g1^1.5`
    Two,
    /// Adds `- K4 g1^2 + K4^2/(2 sqrt(K1 K2)) g1^2.5`
    Four,
}

/// The three coefficients the series solution depends on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesCoefficients {
    pub k1: f64,
    pub k2: f64,
    pub k4: f64,
}

impl SeriesCoefficients {
    pub fn new(k1: f64, k2: f64, k4: f64) -> Self {
        Self { k1, k2, k4 }
    }

    /// Evaluates the truncated series at `gamma1`.
    pub fn eval(&self, gamma1: f64, order: SeriesOrder) -> Result<f64> {
        if !gamma1.is_finite() || gamma1 < 0.0 {
            return Err(Error::Domain(format!(
                "gamma1 must be nonnegative, got {gamma1}"
            )));
        }
        let k1k2 = self.k1 * self.k2;
        if k1k2 <= 0.0 {
            return Err(Error::Domain(format!(
                "series requires K1 K2 > 0, got {k1k2:.6e}"
            )));
        }
        let half_power = k1k2.sqrt();
        let two_term = self.k1 * gamma1 + half_power * gamma1.powf(1.5);
        match order {
            SeriesOrder::Two => Ok(two_term),
            SeriesOrder::Four => {
                let quad = self.k4 * gamma1 * gamma1;
                let five_half = self.k4 * self.k4 / (2.0 * half_power) * gamma1.powf(2.5);
                Ok(two_term - quad + five_half)
            }
        }
    }
}

impl From<&DerivedCoefficients> for SeriesCoefficients {
    fn from(c: &DerivedCoefficients) -> Self {
        Self::new(c.k1, c.k2, c.k4)
    }
}

/// Series solution of the implicit displacement relation up to the requested
/// order.
pub fn series_gamma2(gamma1: f64, coeffs: &DerivedCoefficients, order: SeriesOrder) -> Result<f64> {
    SeriesCoefficients::from(coeffs).eval(gamma1, order)
}

/// The two-coefficient fit form `g2 = H1 g1 + H2 g1^1.5` used by calibration.
pub fn yoffe_model_gamma2(gamma1: f64, h1: f64, h2: f64) -> Result<f64> {
    if !gamma1.is_finite() || gamma1 < 0.0 {
        return Err(Error::Domain(format!(
            "gamma1 must be nonnegative, got {gamma1}"
        )));
    }
    Ok(h1 * gamma1 + h2 * gamma1.powf(1.5))
}
