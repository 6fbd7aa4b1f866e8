//! Surface-to-surface point-load solutions for the elastic half-space.

use crate::error::{Error, Result};
use crate::material::Material;

/// Surface displacement tensor at in-plane offset (dx, dy) from a point
/// force on the surface of a half-space.
///
/// Entry (i, j) is the displacement component i (metres) per unit force in
/// direction j (newtons); x, y are in-plane, z points into the solid. The
/// normal-normal entry is the classical `(1 - nu^2) / (pi E r)`; the
/// in-plane entries and the normal/tangential coupling follow from the same
/// potential-theory solution.
///
/// The tensor satisfies reciprocity: `g(d) = g(-d)^T`.
pub fn greens_surface(dx: f64, dy: f64, material: Material) -> Result<[[f64; 3]; 3]> {
    let r2 = dx * dx + dy * dy;
    if r2 == 0.0 {
        return Err(Error::SingularInput(
            "point-load surface solution is singular at zero offset; \
             use the patch self-term"
                .into(),
        ));
    }
    let r = r2.sqrt();
    let g = material.shear_modulus();
    let nu = material.poisson_ratio();
    let alpha = 1.0 / (4.0 * std::f64::consts::PI * g);

    let tangential_iso = 2.0 * (1.0 - nu) / r;
    let coupling = (1.0 - 2.0 * nu) / r2;

    let mut t = [[0.0; 3]; 3];
    t[0][0] = alpha * (tangential_iso + 2.0 * nu * dx * dx / (r2 * r));
    t[1][1] = alpha * (tangential_iso + 2.0 * nu * dy * dy / (r2 * r));
    t[0][1] = alpha * 2.0 * nu * dx * dy / (r2 * r);
    t[1][0] = t[0][1];
    // u_z from a tangential force and u_x/u_y from a normal force.
    t[2][0] = alpha * coupling * dx;
    t[2][1] = alpha * coupling * dy;
    t[0][2] = -alpha * coupling * dx;
    t[1][2] = -alpha * coupling * dy;
    t[2][2] = alpha * 2.0 * (1.0 - nu) / r;
    Ok(t)
}
