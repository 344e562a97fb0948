//! Bracketed scalar root finding.
//!
//! Plain bisection is the method of record: every constant of this crate is a
//! root of a scalar equation with a proven sign change, so bisection converges
//! unconditionally and serves as its own oracle.

use crate::error::{Error, Result};

/// Tolerances and iteration budget for [`find_root`].
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Absolute tolerance on the bracket width.
    pub abs_tol: f64,
    /// Relative tolerance on the bracket width.
    pub rel_tol: f64,
    /// Maximum number of bisection steps.
    pub max_iter: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_iter: 200,
        }
    }
}

impl SolverConfig {
    /// Tight configuration used for the implicit-arc solves, where downstream
    /// residual requirements sit at 1e-10 and below.
    pub(crate) fn tight() -> Self {
        Self {
            abs_tol: 5e-15,
            rel_tol: 1e-15,
            max_iter: 200,
        }
    }
}

/// Bisection on `[lo, hi]`; requires a sign change (or an exact zero at an
/// endpoint). Returns the bracket midpoint once the width passes tolerance.
pub fn find_root<F>(f: F, lo: f64, hi: f64, cfg: &SolverConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    find_root_fallible(|x| Ok(f(x)), lo, hi, cfg)
}

/// Bisection over a fallible function; inner evaluation errors abort the solve.
pub(crate) fn find_root_fallible<F>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    cfg: &SolverConfig,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let flo = f(lo)?;
    if flo == 0.0 {
        return Ok(lo);
    }
    let fhi = f(hi)?;
    if fhi == 0.0 {
        return Ok(hi);
    }
    if (flo < 0.0) == (fhi < 0.0) {
        return Err(Error::NoSignChange { lo, hi, flo, fhi });
    }
    for _ in 0..cfg.max_iter {
        let mid = 0.5 * (lo + hi);
        let width = hi - lo;
        if width <= cfg.abs_tol + cfg.rel_tol * mid.abs() {
            return Ok(mid);
        }
        let fmid = f(mid)?;
        if fmid == 0.0 {
            return Ok(mid);
        }
        if (fmid < 0.0) == (flo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::MaxIterations(cfg.max_iter))
}

/// Grow the upper endpoint geometrically from `hi0` until `f` changes sign
/// against `f(lo)`, capping at `hi_cap`. Returns the bracketing interval.
pub(crate) fn expand_bracket_up<F>(f: F, lo: f64, hi0: f64, hi_cap: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let flo = f(lo)?;
    let mut hi = hi0;
    let mut prev = lo;
    loop {
        let fhi = f(hi)?;
        if fhi == 0.0 || (fhi < 0.0) != (flo < 0.0) {
            return Ok((prev, hi));
        }
        if hi >= hi_cap {
            return Err(Error::BracketExhausted(hi));
        }
        prev = hi;
        hi = (2.0 * hi).min(hi_cap);
    }
}
