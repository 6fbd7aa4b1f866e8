//! Dense compliance operator assembly and the regularised inverse problem.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::halfspace::greens::greens_surface;
use crate::halfspace::grid::{DisplacementField, SurfaceGrid, TractionField};
use crate::material::Material;

/// Default cap on the system dimension 3 nx ny; dense storage above this is
/// several hundred megabytes and almost certainly a configuration mistake.
pub const DEFAULT_DIM_BUDGET: usize = 6000;

/// Offsets closer than this many pitches get the quadrature treatment when
/// the operator is assembled; beyond it a midpoint evaluation is accurate to
/// well under a percent.
const NEAR_FIELD_PITCHES: f64 = 2.5;

/// Dense linear map from patch forces to nodal surface displacements.
///
/// Entries are metres per newton. Applying it to a traction field first
/// scales by the patch area; see [`forward_displacements`].
#[derive(Debug, Clone)]
pub struct ComplianceOperator {
    grid: SurfaceGrid,
    material: Material,
    matrix: DMatrix<f64>,
}

impl ComplianceOperator {
    pub fn grid(&self) -> &SurfaceGrid {
        &self.grid
    }

    pub fn material(&self) -> Material {
        self.material
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Largest singular value estimated by power iteration (the operator is
    /// symmetric, so this is also the spectral radius).
    pub fn sigma_max_estimate(&self) -> f64 {
        let n = self.dim();
        let mut v = DVector::from_element(n, 1.0 / (n as f64).sqrt());
        let mut sigma = 0.0;
        for _ in 0..60 {
            let w = &self.matrix * &v;
            let norm = w.norm();
            if norm == 0.0 {
                return 0.0;
            }
            sigma = norm;
            v = w / norm;
        }
        sigma
    }

    /// Default Tikhonov parameter: 1e-3 of the largest singular value.
    pub fn default_lambda(&self) -> f64 {
        1.0e-3 * self.sigma_max_estimate()
    }
}

/// Assembles the compliance operator for a grid and half-space material.
///
/// Off-diagonal blocks integrate the point-load tensor over the source
/// patch: 3x3 Gauss-Legendre nodes within 2.5 pitches, a midpoint evaluation
/// beyond. The self block is the closed-form integral of the 1/r kernel over
/// a square, `I1 = 4 h asinh(1)`: sliding a unit traction over the patch
/// displaces its own centre by `alpha (2 - nu) I1` tangentially and
/// `2 alpha (1 - nu) I1` normally, with the odd coupling terms vanishing.
pub fn assemble_compliance(grid: &SurfaceGrid, material: Material) -> Result<ComplianceOperator> {
    assemble_compliance_with_budget(grid, material, DEFAULT_DIM_BUDGET)
}

pub fn assemble_compliance_with_budget(
    grid: &SurfaceGrid,
    material: Material,
    budget: usize,
) -> Result<ComplianceOperator> {
    let n = grid.node_count();
    let dim = 3 * n;
    if dim > budget {
        return Err(Error::ResourceLimit {
            requested: dim,
            budget,
        });
    }

    let h = grid.pitch;
    let area = grid.patch_area();
    let inv_area = 1.0 / area;
    let near2 = (NEAR_FIELD_PITCHES * h) * (NEAR_FIELD_PITCHES * h);

    // 3-point Gauss-Legendre rule on [-1/2, 1/2], scaled by the pitch.
    let q = 0.5 * (3.0_f64 / 5.0).sqrt();
    let nodes = [-q * h, 0.0, q * h];
    let weights = [5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0];

    let g_shear = material.shear_modulus();
    let nu = material.poisson_ratio();
    let alpha = 1.0 / (4.0 * std::f64::consts::PI * g_shear);
    // I1 = closed-form integral of 1/r over the square patch.
    let i1 = 4.0 * h * 1.0_f64.asinh();
    let self_tangential = alpha * (2.0 - nu) * i1 * inv_area;
    let self_normal = 2.0 * alpha * (1.0 - nu) * i1 * inv_area;

    let mut matrix = DMatrix::zeros(dim, dim);
    let positions: Vec<[f64; 2]> = (0..n)
        .map(|k| grid.position(k % grid.nx, k / grid.nx))
        .collect();

    for i in 0..n {
        for j in 0..n {
            if i == j {
                matrix[(3 * i, 3 * i)] = self_tangential;
                matrix[(3 * i + 1, 3 * i + 1)] = self_tangential;
                matrix[(3 * i + 2, 3 * i + 2)] = self_normal;
                continue;
            }
            let dx = positions[i][0] - positions[j][0];
            let dy = positions[i][1] - positions[j][1];
            let block = if dx * dx + dy * dy <= near2 {
                // Average the kernel over the source patch.
                let mut acc = [[0.0; 3]; 3];
                for (sx, wx) in nodes.iter().zip(weights) {
                    for (sy, wy) in nodes.iter().zip(weights) {
                        let t = greens_surface(dx - sx, dy - sy, material)?;
                        let w = wx * wy;
                        for (acc_row, t_row) in acc.iter_mut().zip(&t) {
                            for (a, &tv) in acc_row.iter_mut().zip(t_row) {
                                *a += w * tv;
                            }
                        }
                    }
                }
                acc
            } else {
                greens_surface(dx, dy, material)?
            };
            for (bi, row) in block.iter().enumerate() {
                for (bj, &v) in row.iter().enumerate() {
                    matrix[(3 * i + bi, 3 * j + bj)] = v;
                }
            }
        }
    }

    Ok(ComplianceOperator {
        grid: *grid,
        material,
        matrix,
    })
}

/// Applies the operator: `u = C (f * patch_area)`.
pub fn forward_displacements(
    op: &ComplianceOperator,
    f: &TractionField,
) -> Result<DisplacementField> {
    if f.grid != op.grid {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{} grid", op.grid.nx, op.grid.ny),
            got: format!("{}x{} grid", f.grid.nx, f.grid.ny),
        });
    }
    let area = op.grid.patch_area();
    let fv = DVector::from_iterator(
        op.dim(),
        f.values.iter().flat_map(|v| v.iter().map(|&c| c * area)),
    );
    let uv = &op.matrix * fv;
    let values = (0..op.grid.node_count())
        .map(|k| [uv[3 * k], uv[3 * k + 1], uv[3 * k + 2]])
        .collect();
    DisplacementField::from_values(op.grid, values)
}

/// Reconstructs patch tractions from a measured displacement field by
/// solving `min |C f - u|^2 + lambda^2 |f|^2` (f in force units, converted
/// back to tractions on return).
///
/// `lambda = 0` is allowed while the normal equations stay positive
/// definite; otherwise the error suggests the default heuristic value.
pub fn reconstruct_traction(
    op: &ComplianceOperator,
    u: &DisplacementField,
    lambda: f64,
) -> Result<TractionField> {
    if u.grid != op.grid {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{} grid", op.grid.nx, op.grid.ny),
            got: format!("{}x{} grid", u.grid.nx, u.grid.ny),
        });
    }
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::Domain(format!(
            "regularisation parameter must be nonnegative, got {lambda}"
        )));
    }
    let uv = DVector::from_iterator(op.dim(), u.values.iter().flatten().copied());
    let mut normal = op.matrix.transpose() * &op.matrix;
    for k in 0..op.dim() {
        normal[(k, k)] += lambda * lambda;
    }
    let rhs = op.matrix.transpose() * uv;
    let chol = normal.cholesky().ok_or_else(|| {
        Error::SolverFailure(format!(
            "normal equations not positive definite at lambda = {lambda:.3e}; \
             try lambda = {:.3e}",
            op.default_lambda()
        ))
    })?;
    let fv = chol.solve(&rhs);
    let inv_area = 1.0 / op.grid.patch_area();
    let values = (0..op.grid.node_count())
        .map(|k| {
            [
                fv[3 * k] * inv_area,
                fv[3 * k + 1] * inv_area,
                fv[3 * k + 2] * inv_area,
            ]
        })
        .collect();
    TractionField::from_values(op.grid, values)
}

/// Resultant force: component-wise sum of tractions times patch area.
pub fn integrate_force(f: &TractionField) -> [f64; 3] {
    let area = f.grid.patch_area();
    let mut total = [0.0; 3];
    for v in &f.values {
        total[0] += v[0] * area;
        total[1] += v[1] * area;
        total[2] += v[2] * area;
    }
    total
}
