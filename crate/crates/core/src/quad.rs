//! Adaptive Simpson quadrature.
//!
//! Infinite endpoints are handled by mapping the half line onto `(0, 1]`
//! with `u = a + (1 - t)/t`; the transformed integrand is taken to vanish
//! at `t = 0`, which holds for every density with finite mass decaying
//! faster than `1/u²`.

use crate::{Error, Result};

/// Default absolute tolerance for kernel integrals.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Recursion depth cap.
pub const MAX_DEPTH: u32 = 50;

/// Integrates `f` over `[a, b]` (either endpoint may be infinite) to
/// absolute tolerance `tol`. Reversed limits give the negated integral.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("quadrature tolerance must be positive, got {tol}")));
    }
    if a.is_nan() || b.is_nan() {
        return Err(Error::invalid("quadrature limits must not be NaN"));
    }
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(f, b, a, tol).map(|v| -v);
    }
    match (a.is_finite(), b.is_finite()) {
        (true, true) => simpson(&f, a, b, tol),
        (false, true) => simpson(&|t: f64| mapped(&f, b, t, -1.0), 0.0, 1.0, tol),
        (true, false) => simpson(&|t: f64| mapped(&f, a, t, 1.0), 0.0, 1.0, tol),
        (false, false) => {
            let left = simpson(&|t: f64| mapped(&f, 0.0, t, -1.0), 0.0, 1.0, tol / 2.0)?;
            let right = simpson(&|t: f64| mapped(&f, 0.0, t, 1.0), 0.0, 1.0, tol / 2.0)?;
            Ok(left + right)
        }
    }
}

fn mapped<F: Fn(f64) -> f64>(f: &F, anchor: f64, t: f64, dir: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let u = anchor + dir * (1.0 - t) / t;
    let v = f(u) / (t * t);
    if v.is_finite() {
        v
    } else {
        0.0
    }
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    refine(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::Quadrature { a, b, tol });
    }
    Ok(refine(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)?
        + refine(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)?)
}
