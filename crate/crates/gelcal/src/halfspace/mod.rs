//! Discretised elastic half-space surface mechanics.
//!
//! A square-patch grid carries piecewise-constant surface tractions; the
//! point-load surface solutions of the half-space provide the compliance
//! blocks between patches. The assembled dense operator maps patch forces to
//! surface displacements, and its Tikhonov-regularised inverse reconstructs
//! distributed tractions from measured displacement fields.

mod greens;
mod grid;
mod operator;
mod rotation;

pub use greens::greens_surface;
pub use grid::{DisplacementField, SurfaceGrid, TractionField};
pub use operator::{
    assemble_compliance, assemble_compliance_with_budget, forward_displacements, integrate_force,
    reconstruct_traction, ComplianceOperator, DEFAULT_DIM_BUDGET,
};
pub use rotation::{field_rotation, RotationEstimate};
