//! In-plane rigid-rotation extraction from a surface displacement field.

use crate::error::{Error, Result};
use crate::halfspace::grid::DisplacementField;

/// Rotation angle recovered from a displacement field by two routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationEstimate {
    /// Least-squares rigid rotation angle, radians. Exact on rigid fields.
    pub rigid_rad: f64,
    /// Finite-rotation reading of the mask-averaged discrete curl:
    /// `asin(<curl>/2)`. Coincides with `rigid_rad` on rigid fields.
    pub curl_rad: f64,
}

/// Fits the in-plane rigid rotation that best explains the masked nodes'
/// displacements, and cross-checks it with the discrete curl of the field.
///
/// The rigid fit subtracts the mask centroid from both the reference and the
/// displaced configurations, so a uniform translation contributes exactly
/// zero; `center` fixes the reference configuration's pivot but does not
/// bias the angle. Derivatives for the curl use central differences on
/// interior nodes and one-sided differences at the grid edge, both exact for
/// the linear field a rigid motion induces.
pub fn field_rotation(
    u: &DisplacementField,
    center: [f64; 2],
    mask: &[(usize, usize)],
) -> Result<RotationEstimate> {
    let grid = &u.grid;
    if mask.len() < 3 {
        return Err(Error::DegenerateGeometry(format!(
            "rotation fit needs at least 3 nodes, got {}",
            mask.len()
        )));
    }
    for &(ix, iy) in mask {
        if ix >= grid.nx || iy >= grid.ny {
            return Err(Error::DegenerateGeometry(format!(
                "mask node ({ix}, {iy}) outside {}x{} grid",
                grid.nx, grid.ny
            )));
        }
    }

    // Reference points relative to `center` and their displaced images.
    let p: Vec<[f64; 2]> = mask
        .iter()
        .map(|&(ix, iy)| {
            let pos = grid.position(ix, iy);
            [pos[0] - center[0], pos[1] - center[1]]
        })
        .collect();
    let q: Vec<[f64; 2]> = mask
        .iter()
        .zip(&p)
        .map(|(&(ix, iy), pt)| {
            let d = u.at(ix, iy);
            [pt[0] + d[0], pt[1] + d[1]]
        })
        .collect();

    let n = mask.len() as f64;
    let p_bar = centroid(&p, n);
    let q_bar = centroid(&q, n);

    // Collinearity check on the centred reference configuration.
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for pt in &p {
        let x = pt[0] - p_bar[0];
        let y = pt[1] - p_bar[1];
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    let det = sxx * syy - sxy * sxy;
    let trace = sxx + syy;
    if trace <= 0.0 || det <= 1e-12 * trace * trace {
        return Err(Error::DegenerateGeometry(
            "mask nodes are collinear; the rotation angle is unobservable".into(),
        ));
    }

    // Procrustes angle: theta = atan2(sum p x q, sum p . q) over centred sets.
    let mut cross = 0.0;
    let mut dot = 0.0;
    for (pt, qt) in p.iter().zip(&q) {
        let px = pt[0] - p_bar[0];
        let py = pt[1] - p_bar[1];
        let qx = qt[0] - q_bar[0];
        let qy = qt[1] - q_bar[1];
        cross += px * qy - py * qx;
        dot += px * qx + py * qy;
    }
    let rigid_rad = cross.atan2(dot);

    // Mask-averaged discrete curl.
    let mut curl_sum = 0.0;
    for &(ix, iy) in mask {
        let duy_dx = derivative(u, ix, iy, 0, 1)?;
        let dux_dy = derivative(u, ix, iy, 1, 0)?;
        curl_sum += duy_dx - dux_dy;
    }
    let half_curl = (curl_sum / (2.0 * n)).clamp(-1.0, 1.0);
    let curl_rad = half_curl.asin();

    Ok(RotationEstimate {
        rigid_rad,
        curl_rad,
    })
}

fn centroid(pts: &[[f64; 2]], n: f64) -> [f64; 2] {
    let mut c = [0.0, 0.0];
    for p in pts {
        c[0] += p[0];
        c[1] += p[1];
    }
    [c[0] / n, c[1] / n]
}

/// d(u[component]) / d(axis) at a node, central where possible.
fn derivative(
    u: &DisplacementField,
    ix: usize,
    iy: usize,
    axis: usize,
    component: usize,
) -> Result<f64> {
    let grid = &u.grid;
    let (pos, extent) = if axis == 0 {
        (ix, grid.nx)
    } else {
        (iy, grid.ny)
    };
    if extent < 2 {
        return Err(Error::DegenerateGeometry(
            "grid too thin for in-plane derivatives".into(),
        ));
    }
    let sample = |k: usize| {
        if axis == 0 {
            u.at(k, iy)[component]
        } else {
            u.at(ix, k)[component]
        }
    };
    let h = grid.pitch;
    Ok(if pos == 0 {
        (sample(1) - sample(0)) / h
    } else if pos == extent - 1 {
        (sample(pos) - sample(pos - 1)) / h
    } else {
        (sample(pos + 1) - sample(pos - 1)) / (2.0 * h)
    })
}
