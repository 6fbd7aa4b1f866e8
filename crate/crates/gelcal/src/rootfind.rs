//! Safeguarded scalar root finding: bisection with secant acceleration.

use crate::error::{Error, Result};

/// Finds a root of `f` in `[lo, hi]`, which must bracket a sign change.
///
/// Bisection guarantees convergence; a secant candidate replaces the
/// midpoint whenever it falls strictly inside the current bracket, which
/// gives superlinear convergence on smooth functions. Iteration stops once
/// the bracket width drops below `max(atol, 4 eps |mid|)`, then the best
/// iterate is polished with a few unguarded secant steps so the result is
/// accurate to near machine precision even when `atol` is loose.
pub fn bisect_secant<F>(f: F, lo: f64, hi: f64, atol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    assert!(lo <= hi, "invalid bracket: lo > hi");
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);

    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::BracketFailure { f_lo: fa, f_hi: fb });
    }

    let mut x = a;
    let mut fx = fa;
    for _ in 0..max_iter {
        let width = b - a;
        let mid = 0.5 * (a + b);
        if width <= atol.max(4.0 * f64::EPSILON * mid.abs()) {
            break;
        }

        // Secant candidate from the bracket endpoints; fall back to the
        // midpoint if it is outside or not finite.
        let mut c = if fb != fa {
            b - fb * (b - a) / (fb - fa)
        } else {
            mid
        };
        if !c.is_finite() || c <= a || c >= b {
            c = mid;
        }
        let fc = f(c);
        x = c;
        fx = fc;
        if fc == 0.0 {
            return Ok(c);
        }
        if fc.signum() == fa.signum() {
            a = c;
            fa = fc;
        } else {
            b = c;
            fb = fc;
        }
    }

    // Secant polish from the final bracket. Abandoned as soon as a step
    // leaves the bracket or stops shrinking.
    let (mut x0, mut f0, mut x1, mut f1) = if fx != 0.0 && x > a && x < b {
        if fx.signum() == fa.signum() {
            (x, fx, b, fb)
        } else {
            (a, fa, x, fx)
        }
    } else {
        (a, fa, b, fb)
    };
    let mut best = if f0.abs() <= f1.abs() { x0 } else { x1 };
    let mut best_f = f0.abs().min(f1.abs());
    for _ in 0..12 {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2 < lo || x2 > hi {
            break;
        }
        let f2 = f(x2);
        if f2.abs() < best_f {
            best = x2;
            best_f = f2.abs();
        }
        if f2 == 0.0 || (x2 - x1).abs() <= 2.0 * f64::EPSILON * x2.abs() {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_root() {
        let root = bisect_secant(|x| x * x - 2.0, 0.0, 2.0, 1e-12, 200).unwrap();
        assert!((root - 2.0_f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let err = bisect_secant(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 200).unwrap_err();
        match err {
            Error::BracketFailure { f_lo, f_hi } => {
                assert_eq!(f_lo, 2.0);
                assert_eq!(f_hi, 2.0);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn handles_root_at_endpoint() {
        let root = bisect_secant(|x| x, 0.0, 1.0, 1e-12, 200).unwrap();
        assert_eq!(root, 0.0);
    }

    #[test]
    fn tiny_scale_root() {
        // Roots at 1e-13 scale must still resolve to high relative accuracy.
        let root = bisect_secant(|x| x - 1.3e-13, 0.0, 1e-12, 1e-9, 200).unwrap();
        assert!((root - 1.3e-13).abs() < 1e-26);
    }
}
