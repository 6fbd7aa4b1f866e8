//! Composite contact coefficients shared by the normal and torsion models.

use crate::contact::{torsion::rod_correction, YOFFE_FACTOR};
use crate::error::{Error, Result};
use crate::material::{ContactGeometry, Material};

/// Non-fatal conditions detected while deriving coefficients.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientWarning {
    /// The indenter's plane-strain modulus does not exceed the elastomer's;
    /// the model premise is violated and fitted slopes lose meaning.
    IndenterSofterThanElastomer { e1_star: f64, e2_star: f64 },
    /// R1 < 5 R2: the elastomer is not flat enough relative to the indenter.
    SlenderContactViolated { radius_ratio: f64 },
    /// One of the coefficient orderings A1 > A2, B2 > B1, C > 0 failed.
    OrderingViolated(&'static str),
    /// A1 B2 - A2 B1 <= 0: the implicit displacement relation degenerates and
    /// C, K2, K3, K4 are undefined (stored as NaN). K1 and the theoretical
    /// slopes remain valid.
    ImplicitRelationDegenerate { d: f64 },
}

impl std::fmt::Display for CoefficientWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::IndenterSofterThanElastomer { e1_star, e2_star } => write!(
                f,
                "indenter softer than elastomer, model premise violated \
                 (E1' = {e1_star:.4e} Pa >= E2' = {e2_star:.4e} Pa)"
            ),
            Self::SlenderContactViolated { radius_ratio } => write!(
                f,
                "elastomer effective radius is only {radius_ratio:.2}x the indenter radius; \
                 the model assumes R1 >> R2"
            ),
            Self::OrderingViolated(which) => {
                write!(f, "coefficient ordering violated: {which}")
            }
            Self::ImplicitRelationDegenerate { d } => write!(
                f,
                "a1 b2 - a2 b1 = {d:.4e} <= 0: the implicit displacement \
                 relation degenerates for this pair"
            ),
        }
    }
}

/// All composite coefficients of the normal and torsion contact models for a
/// fixed pair of bodies, in SI units.
///
/// `a1, a2` are the quadratic displacement coefficients (1/m), `b1, b2` the
/// cubic correction coefficients (1/m^2), and `c = 1/(a1 b2 - a2 b1)`. The
/// `k*` values feed the series solution; `h1_theory`, `h2_theory`, and
/// `h3_theory` are the theoretical values of the fitted calibration slopes.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedCoefficients {
    pub e_star: f64,
    pub r_star: f64,
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
    pub c: f64,
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub k4: f64,
    pub h1_theory: f64,
    /// sqrt(K1 K2), per m^(1/2); `None` when K2 <= 0 (the 1.5-order theory
    /// coefficient only exists while A1 B2 > 3 A2 B1 holds).
    pub h2_theory: Option<f64>,
    pub h3_theory: f64,
    /// Indentation ratio beta = dh/R2 the torsion slope was evaluated at.
    pub beta: f64,
    /// Shear-modulus ratio G1/G2 used by the torsion model.
    pub shear_ratio: f64,
    pub warnings: Vec<CoefficientWarning>,
}

impl DerivedCoefficients {
    /// Builds a coefficient set directly from the four displacement
    /// coefficients, in any consistent unit system.
    ///
    /// Intended for analysis of published coefficient tables; the torsion
    /// fields default to identical-material values and `r_star` to `1/a1`.
    pub fn from_raw(a1: f64, a2: f64, b1: f64, b2: f64) -> Result<Self> {
        for (name, v) in [("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Domain(format!(
                    "coefficient {name} must be positive and finite, got {v}"
                )));
            }
        }
        if a1 * b2 - a2 * b1 <= 0.0 {
            return Err(Error::Domain(format!(
                "a1 b2 - a2 b1 = {:.6e} must be positive; the contact model \
                 does not apply to this coefficient set",
                a1 * b2 - a2 * b1
            )));
        }
        let mut coeffs = Self {
            e_star: f64::NAN,
            r_star: 1.0 / a1,
            a1,
            a2,
            b1,
            b2,
            c: f64::NAN,
            k1: f64::NAN,
            k2: f64::NAN,
            k3: f64::NAN,
            k4: f64::NAN,
            h1_theory: f64::NAN,
            h2_theory: None,
            h3_theory: f64::NAN,
            beta: 0.2,
            shear_ratio: 1.0,
            warnings: Vec::new(),
        };
        coeffs.fill_composites();
        coeffs.h3_theory = (1.0 + rod_correction(coeffs.beta)?) * coeffs.shear_ratio;
        coeffs.check_orderings();
        Ok(coeffs)
    }

    /// Returns the same pair with the indenter-side quadratic coefficient
    /// replaced by its Yoffe-corrected value `a2' = 32/(9 pi) a2` and every
    /// composite recomputed consistently.
    ///
    /// The corrected set is the full semi-analytic normal-contact model: its
    /// exact root has origin slope `h1_theory` of the uncorrected set.
    pub fn yoffe_corrected(&self) -> Result<Self> {
        let mut corrected = self.clone();
        corrected.a2 = YOFFE_FACTOR * self.a2;
        corrected.fill_composites();
        if !corrected.c.is_finite() {
            return Err(Error::Domain(
                "corrected coefficient set degenerates (a1 b2 <= a2' b1)".into(),
            ));
        }
        corrected.warnings = self.warnings.clone();
        // h1/h3 keep their theoretical interpretation for the original pair.
        corrected.h1_theory = self.h1_theory;
        corrected.h3_theory = self.h3_theory;
        Ok(corrected)
    }

    /// Computes K1 and the theoretical slope unconditionally; the
    /// D-dependent composites become NaN (with a warning) when the implicit
    /// relation degenerates.
    fn fill_composites(&mut self) {
        let (a1, a2, b1, b2) = (self.a1, self.a2, self.b1, self.b2);
        self.k1 = a2 / a1;
        self.h1_theory = YOFFE_FACTOR * self.k1;
        let d = a1 * b2 - a2 * b1;
        if d <= 0.0 {
            self.c = f64::NAN;
            self.k2 = f64::NAN;
            self.k3 = f64::NAN;
            self.k4 = f64::NAN;
            self.h2_theory = None;
            self.warnings
                .push(CoefficientWarning::ImplicitRelationDegenerate { d });
            return;
        }
        self.c = 1.0 / d;
        self.k2 = b2 * b2 * (a1 * b2 - 3.0 * a2 * b1) / (a1 * a1 * a2 * d);
        self.k3 = b2 * b2 * b2 / (a1 * a2 * d);
        self.k4 = 0.5 * (self.k3 - self.k2);
        self.h2_theory = if self.k2 > 0.0 {
            Some((self.k1 * self.k2).sqrt())
        } else {
            None
        };
    }

    fn check_orderings(&mut self) {
        if self.a1 <= self.a2 {
            self.warnings
                .push(CoefficientWarning::OrderingViolated("a1 > a2"));
        }
        if self.b2 <= self.b1 {
            self.warnings
                .push(CoefficientWarning::OrderingViolated("b2 > b1"));
        }
        // c > 0 is structural (fill_composites rejects d <= 0).
    }
}

/// Derives every composite coefficient for a contact pair at indentation
/// ratio `beta`.
///
/// Non-fatal premise violations (soft indenter, stubby elastomer, broken
/// orderings) are reported through the returned `warnings` field.
pub fn derive_coefficients(
    soft: Material,
    indenter: Material,
    geometry: ContactGeometry,
    beta: f64,
) -> Result<DerivedCoefficients> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(Error::Domain(format!(
            "beta must lie in (0, 1), got {beta}"
        )));
    }

    let e1_star = soft.plane_strain_modulus();
    let e2_star = indenter.plane_strain_modulus();
    let e_star = 1.0 / (1.0 / e1_star + 1.0 / e2_star);
    let r_star = geometry.effective_radius();
    let r1 = geometry.elastomer_radius();
    let r2 = geometry.indenter_radius();

    let a1 = e_star / (e1_star * r_star);
    let a2 = e_star / (e2_star * r_star);
    let b_coeff = |m: &Material, radius: f64| {
        let nu = m.poisson_ratio();
        (1.0 + nu) * (3.0 - 2.0 * nu) * e_star
            / (3.0 * std::f64::consts::PI * m.young_modulus() * radius * r_star)
    };
    let b1 = b_coeff(&soft, r1);
    let b2 = b_coeff(&indenter, r2);

    let shear_ratio = soft.shear_modulus() / indenter.shear_modulus();
    let mut coeffs = DerivedCoefficients {
        e_star,
        r_star,
        a1,
        a2,
        b1,
        b2,
        c: f64::NAN,
        k1: f64::NAN,
        k2: f64::NAN,
        k3: f64::NAN,
        k4: f64::NAN,
        h1_theory: f64::NAN,
        h2_theory: None,
        h3_theory: f64::NAN,
        beta,
        shear_ratio,
        warnings: Vec::new(),
    };
    coeffs.fill_composites();
    coeffs.h3_theory = (1.0 + rod_correction(beta)?) * shear_ratio;

    if e2_star <= e1_star {
        coeffs
            .warnings
            .push(CoefficientWarning::IndenterSofterThanElastomer { e1_star, e2_star });
    }
    if !geometry.slenderness_ok() {
        coeffs.warnings.push(CoefficientWarning::SlenderContactViolated {
            radius_ratio: r1 / r2,
        });
    }
    coeffs.check_orderings();
    Ok(coeffs)
}
