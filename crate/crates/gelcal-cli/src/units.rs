//! Boundary unit conversions. File and terminal I/O uses millimetres and
//! degrees to match the bench instruments; everything internal is SI.

pub fn mm_to_m(v: f64) -> f64 {
    v * 1.0e-3
}

pub fn m_to_mm(v: f64) -> f64 {
    v * 1.0e3
}

pub fn deg_to_rad(v: f64) -> f64 {
    v.to_radians()
}

pub fn rad_to_deg(v: f64) -> f64 {
    v.to_degrees()
}

pub fn pa_to_mpa(v: f64) -> f64 {
    v * 1.0e-6
}

/// kPa is the traction-field file unit.
pub fn pa_to_kpa(v: f64) -> f64 {
    v * 1.0e-3
}

/// H2 carries length^(-1/2): per sqrt(mm) at the boundary, per sqrt(m)
/// internally.
pub fn h2_si_to_per_sqrt_mm(v: f64) -> f64 {
    v * 1.0e-3_f64.sqrt()
}
