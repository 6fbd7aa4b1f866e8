//! Approximation-error tabulation: series and fit-form solutions against the
//! exact implicit-relation root.

use crate::contact::{series_gamma2, solve_gamma2_exact, DerivedCoefficients, SeriesOrder};
use crate::error::Result;

/// One grid point of the error curve. The order-2 entry doubles as the
/// fit-form model at theoretical coefficients, since the two expressions
/// coincide term by term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesErrorRow {
    pub gamma1: f64,
    pub exact: f64,
    pub series_order2: f64,
    pub series_order4: f64,
    /// |series - exact| / exact; zero when both vanish.
    pub rel_err_order2: f64,
    pub rel_err_order4: f64,
}

/// Tabulates the relative deviation of the truncated series solutions from
/// the exact root over a gamma1 grid.
pub fn series_vs_exact_report(
    coeffs: &DerivedCoefficients,
    gamma1_grid: &[f64],
) -> Result<Vec<SeriesErrorRow>> {
    let mut rows = Vec::with_capacity(gamma1_grid.len());
    for &g1 in gamma1_grid {
        let exact = solve_gamma2_exact(g1, coeffs)?;
        let s2 = series_gamma2(g1, coeffs, SeriesOrder::Two)?;
        let s4 = series_gamma2(g1, coeffs, SeriesOrder::Four)?;
        let rel = |s: f64| {
            if exact == 0.0 {
                (s - exact).abs()
            } else {
                ((s - exact) / exact).abs()
            }
        };
        rows.push(SeriesErrorRow {
            gamma1: g1,
            exact,
            series_order2: s2,
            series_order4: s4,
            rel_err_order2: rel(s2),
            rel_err_order4: rel(s4),
        });
    }
    Ok(rows)
}
