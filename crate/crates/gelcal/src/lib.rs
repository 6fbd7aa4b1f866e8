//! Mechanical calibration of soft tactile-sensor elastomers from paired
//! deformation measurements, and distributed-force reconstruction on an
//! elastic half-space.
//!
//! The crate covers the full desk-side pipeline:
//!
//! - [`contact`]: forward models for normal indentation (Hertz with
//!   finite-size and transverse-displacement corrections) and torsion
//!   (torque-twist relation with a rod-model correction), against a known
//!   elastic indenter.
//! - [`calibration`]: least-squares fits of the displacement and twist
//!   ratios, and closed-form inversion to the elastomer's Young's modulus
//!   and Poisson's ratio.
//! - [`halfspace`]: a discretised surface compliance operator built from the
//!   point-load half-space solutions, its regularised inverse for traction
//!   reconstruction, force integration, and rigid-rotation extraction.
//! - [`synth`]: synthetic-experiment generation and calibration-error sweeps
//!   against the semi-analytic forward models.
//!
//! Everything internal is SI (metres, pascals, radians, newtons).

pub mod calibration;
pub mod contact;
pub mod error;
pub mod halfspace;
pub mod material;
pub mod rootfind;
pub mod synth;

pub use error::{Error, Result};
pub use material::{ContactGeometry, ContactPair, Material};
