//! Closed-form inversion of the fitted slopes (H1, H3) to the elastomer's
//! elastic constants.

use crate::contact::{rod_correction, YOFFE_FACTOR};
use crate::error::{Error, Result};
use crate::material::Material;

/// Clamping bounds for the recovered Poisson ratio.
const NU_MIN: f64 = 0.001;
const NU_MAX: f64 = 0.499;

/// Inversion output, with any clamping recorded as warnings.
#[derive(Debug, Clone, PartialEq)]
pub struct InvertedParameters {
    /// Young's modulus of the elastomer, Pa.
    pub e1: f64,
    /// Poisson's ratio of the elastomer, clamped into (0.001, 0.499).
    pub nu1: f64,
    pub warnings: Vec<String>,
}

/// Inverts the fitted slopes at the standard operating point beta = 0.2:
///
/// `E1 = [0.993 - 0.279 (H3/H1)(1 - nu2)] H3 E2 / (1 + nu2)`
/// `nu1 = 1 - 0.562 (H3/H1)(1 - nu2)`
pub fn invert_parameters(h1: f64, h3: f64, indenter: Material) -> Result<InvertedParameters> {
    invert_with_constants(h1, h3, indenter, 0.993, 0.279, 0.562)
}

/// Inversion generalised to an arbitrary indentation ratio `beta`.
///
/// With twist factor `kappa = 1 + rod_correction(beta)` the three constants
/// become `2/kappa`, `32/(9 pi) / kappa^2`, and `32/(9 pi kappa)`; at
/// beta = 0.2 these round to the standard 0.993 / 0.279 / 0.562, which are
/// used verbatim there so results match the published arithmetic.
pub fn invert_parameters_with_beta(
    h1: f64,
    h3: f64,
    indenter: Material,
    beta: f64,
) -> Result<InvertedParameters> {
    if (beta - 0.2).abs() < 1.0e-9 {
        return invert_parameters(h1, h3, indenter);
    }
    let kappa = 1.0 + rod_correction(beta)?;
    invert_with_constants(
        h1,
        h3,
        indenter,
        2.0 / kappa,
        YOFFE_FACTOR / (kappa * kappa),
        YOFFE_FACTOR / kappa,
    )
}

fn invert_with_constants(
    h1: f64,
    h3: f64,
    indenter: Material,
    c_e0: f64,
    c_e1: f64,
    c_nu: f64,
) -> Result<InvertedParameters> {
    if !h1.is_finite() || h1 <= 0.0 || !h3.is_finite() || h3 <= 0.0 {
        return Err(Error::Domain(format!(
            "fitted slopes must be positive, got H1 = {h1}, H3 = {h3}"
        )));
    }
    let nu2 = indenter.poisson_ratio();
    let e2 = indenter.young_modulus();
    let x = h3 / h1 * (1.0 - nu2);

    let e1 = (c_e0 - c_e1 * x) * h3 * e2 / (1.0 + nu2);
    if !e1.is_finite() || e1 <= 0.0 {
        return Err(Error::InversionFailure { h1, h3 });
    }

    let nu1_raw = 1.0 - c_nu * x;
    let mut warnings = Vec::new();
    let nu1 = if nu1_raw <= NU_MIN {
        warnings.push(format!(
            "nu1 = {nu1_raw:.4} out of physical range, clamped to {NU_MIN}"
        ));
        NU_MIN
    } else if nu1_raw >= NU_MAX {
        warnings.push(format!(
            "nu1 = {nu1_raw:.4} out of physical range, clamped to {NU_MAX}"
        ));
        NU_MAX
    } else {
        nu1_raw
    };

    Ok(InvertedParameters { e1, nu1, warnings })
}
