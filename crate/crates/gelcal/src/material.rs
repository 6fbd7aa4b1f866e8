//! Elastic materials and contact geometry.
//!
//! All quantities are SI: pascals for moduli, metres for lengths.

use crate::error::{Error, Result};

/// Linear-elastic material described by Young's modulus and Poisson's ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    young_modulus: f64,
    poisson_ratio: f64,
}

impl Material {
    /// Creates a material, enforcing E > 0 and 0 < nu < 0.5.
    pub fn new(young_modulus: f64, poisson_ratio: f64) -> Result<Self> {
        if !young_modulus.is_finite() || young_modulus <= 0.0 {
            return Err(Error::InvalidMaterial(format!(
                "young_modulus must be positive and finite, got {young_modulus}"
            )));
        }
        if !poisson_ratio.is_finite() || poisson_ratio <= 0.0 || poisson_ratio >= 0.5 {
            return Err(Error::InvalidMaterial(format!(
                "poisson_ratio must lie in (0, 0.5), got {poisson_ratio}"
            )));
        }
        Ok(Self {
            young_modulus,
            poisson_ratio,
        })
    }

    /// Convenience constructor with the modulus given in MPa.
    pub fn from_mpa(young_modulus_mpa: f64, poisson_ratio: f64) -> Result<Self> {
        Self::new(young_modulus_mpa * 1.0e6, poisson_ratio)
    }

    pub fn young_modulus(&self) -> f64 {
        self.young_modulus
    }

    pub fn poisson_ratio(&self) -> f64 {
        self.poisson_ratio
    }

    /// Shear modulus G = E / (2(1 + nu)).
    pub fn shear_modulus(&self) -> f64 {
        self.young_modulus / (2.0 * (1.0 + self.poisson_ratio))
    }

    /// Plane-strain modulus E' with 1/E' = (1 - nu^2)/E.
    pub fn plane_strain_modulus(&self) -> f64 {
        self.young_modulus / (1.0 - self.poisson_ratio * self.poisson_ratio)
    }
}

/// Spherical contact geometry: the elastomer's effective radius and the
/// indenter radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactGeometry {
    elastomer_radius: f64,
    indenter_radius: f64,
}

impl ContactGeometry {
    /// Creates a geometry, enforcing R1 >= R2 > 0.
    ///
    /// The contact model assumes the elastomer is much flatter than the
    /// indenter; [`ContactGeometry::slenderness_ok`] reports whether
    /// R1 >= 5 R2 holds.
    pub fn new(elastomer_radius: f64, indenter_radius: f64) -> Result<Self> {
        if !indenter_radius.is_finite() || indenter_radius <= 0.0 {
            return Err(Error::InvalidGeometry(format!(
                "indenter_radius must be positive and finite, got {indenter_radius}"
            )));
        }
        if !elastomer_radius.is_finite() || elastomer_radius < indenter_radius {
            return Err(Error::InvalidGeometry(format!(
                "elastomer_radius must satisfy R1 >= R2, got R1 = {elastomer_radius}, R2 = {indenter_radius}"
            )));
        }
        Ok(Self {
            elastomer_radius,
            indenter_radius,
        })
    }

    /// Convenience constructor with radii given in millimetres.
    pub fn from_mm(elastomer_radius_mm: f64, indenter_radius_mm: f64) -> Result<Self> {
        Self::new(elastomer_radius_mm * 1.0e-3, indenter_radius_mm * 1.0e-3)
    }

    pub fn elastomer_radius(&self) -> f64 {
        self.elastomer_radius
    }

    pub fn indenter_radius(&self) -> f64 {
        self.indenter_radius
    }

    /// Effective radius R* with 1/R* = 1/R1 + 1/R2.
    pub fn effective_radius(&self) -> f64 {
        1.0 / (1.0 / self.elastomer_radius + 1.0 / self.indenter_radius)
    }

    /// Whether the slender-contact assumption R1 >= 5 R2 holds.
    pub fn slenderness_ok(&self) -> bool {
        self.elastomer_radius >= 5.0 * self.indenter_radius
    }
}

/// A soft body pressed by an elastic indenter: the configuration every
/// forward model and calibration run is parameterised by.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContactPair {
    pub soft: Material,
    pub indenter: Material,
    pub geometry: ContactGeometry,
}

impl ContactPair {
    pub fn new(soft: Material, indenter: Material, geometry: ContactGeometry) -> Self {
        Self {
            soft,
            indenter,
            geometry,
        }
    }

    /// Derives the composite contact coefficients at indentation ratio
    /// `beta`.
    pub fn derive(&self, beta: f64) -> Result<crate::contact::DerivedCoefficients> {
        crate::contact::derive_coefficients(self.soft, self.indenter, self.geometry, beta)
    }
}
