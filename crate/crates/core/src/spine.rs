//! The two implicit systole-tie arcs, their junction at the three-systole
//! point, and systole classification inside the reduced fundamental domain.
//!
//! In slope coordinates (c, u = t/c) the locus ℓ_β = ℓ_γ is the graph of
//! u₁ : [c₁, ∞) → (0, 1] and the locus ℓ_α = ℓ_γ is the graph of
//! u₀ : [c₀, ∞) → [0, 1). Both are solved by bisection in u, justified by the
//! strict monotonicity of the length functions in the twist. The arcs meet at
//! the unique point (c_M, u_M) where α, β and γ all tie; the spine inside the
//! reduced domain is exactly the two sub-arcs up to that junction.

use serde::Serialize;

use crate::constants;
use crate::domain;
use crate::error::{Error, Result};
use crate::geometry::{self, CurveClass, FnPoint, Genus, LengthReport};
use crate::solver::{find_root, find_root_fallible, SolverConfig};

/// Residual below which an implicit solve snaps to the arc's endpoint value.
/// Both arcs leave their endpoints with a square-root tangency (the twist
/// derivative of the defining length vanishes there), so snapping on the
/// residual rather than on c keeps endpoint output exact.
const ENDPOINT_RESIDUAL: f64 = 1e-10;

/// A point in slope coordinates (c, u = t/c).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SlopePoint {
    pub genus: Genus,
    pub c: f64,
    pub u: f64,
}

impl SlopePoint {
    pub fn t(&self) -> f64 {
        self.c * self.u
    }
}

/// Which tie locus an arc samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ArcKind {
    /// ℓ_β = ℓ_γ, starting at (c₁, 1).
    BetaGamma,
    /// ℓ_α = ℓ_γ, starting at (c₀, 0).
    AlphaGamma,
}

/// A sampled polyline of one implicit arc.
#[derive(Debug, Clone, Serialize)]
pub struct SpineArc {
    pub kind: ArcKind,
    pub samples: Vec<SlopePoint>,
    pub c_range: (f64, f64),
}

/// The unique point where α, β and γ tie; junction of the two arcs and
/// maximizer of the systole over the curve.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TriplePoint {
    pub c_m: f64,
    pub u_m: f64,
}

/// Systole classification at one point: the minimum candidate length and the
/// classes tying with it.
#[derive(Debug, Clone, Serialize)]
pub struct SystoleReport {
    pub sys_length: f64,
    pub systoles: Vec<CurveClass>,
    pub lengths: LengthReport,
    pub tie_tol: f64,
}

fn beta_gap(genus: Genus, c: f64, u: f64) -> f64 {
    geometry::beta_length_raw(genus, c, c * u) - 2.0 * c
}

fn alpha_gap(genus: Genus, c: f64, u: f64) -> f64 {
    geometry::alpha_length(genus, c, c * u) - 2.0 * c
}

/// The unique u ∈ (0, 1] with ℓ_β(c, cu) = 2c, defined for c ≥ c₁.
///
/// The gap is strictly decreasing in u and positive at u → 0⁺, so bisection
/// on [1e-15, 1] is exact; u₁(c₁) = 1.
pub fn u1(genus: Genus, c: f64) -> Result<f64> {
    let c1 = constants::c1(genus)?;
    if c < c1 - 1e-12 {
        return Err(Error::BelowArcDomain {
            what: "u1",
            c,
            lo: c1,
        });
    }
    let f = |u: f64| beta_gap(genus, c, u);
    let f_top = f(1.0);
    if f_top >= 0.0 || f_top.abs() <= ENDPOINT_RESIDUAL {
        if f_top.abs() <= ENDPOINT_RESIDUAL {
            return Ok(1.0);
        }
        return Err(Error::NoRoot {
            what: "u1",
            c,
            detail: format!("gap at u = 1 is {f_top:e}, expected ≤ 0 for c ≥ c₁"),
        });
    }
    find_root(f, 1e-15, 1.0, &SolverConfig::tight())
}

/// The unique u ∈ [0, 1) with ℓ_α(c, cu) = 2c, defined for c ≥ c₀.
///
/// The gap is strictly increasing in u and stays positive at u = 1, so
/// bisection on [0, 1 − 1e-15] is exact; u₀(c₀) = 0. Its graph is the
/// self-dual locus c = c_α inside the reduced domain.
pub fn u0(genus: Genus, c: f64) -> Result<f64> {
    let c0 = constants::c0(genus);
    if c < c0 - 1e-12 {
        return Err(Error::BelowArcDomain {
            what: "u0",
            c,
            lo: c0,
        });
    }
    let f = |u: f64| alpha_gap(genus, c, u);
    let f_bottom = f(0.0);
    if f_bottom >= 0.0 || f_bottom.abs() <= ENDPOINT_RESIDUAL {
        if f_bottom.abs() <= ENDPOINT_RESIDUAL {
            return Ok(0.0);
        }
        return Err(Error::NoRoot {
            what: "u0",
            c,
            detail: format!("gap at u = 0 is {f_bottom:e}, expected ≤ 0 for c ≥ c₀"),
        });
    }
    find_root(f, 0.0, 1.0 - 1e-15, &SolverConfig::tight())
}

/// Locate the junction (c_M, u_M) of the two arcs by rooting
/// h(c) = u₁(c) − u₀(c) upward from max(c₀, c₁).
pub fn triple_point(genus: Genus) -> Result<TriplePoint> {
    let start = constants::c0(genus).max(constants::c1(genus)?);
    let h = |c: f64| -> Result<f64> { Ok(u1(genus, c)? - u0(genus, c)?) };
    // h(start) > 0 since u₁ starts at 1 while u₀ < 1; expand until it flips.
    let mut step = 0.25;
    let mut hi = start + step;
    loop {
        if hi > geometry::C_MAX {
            return Err(Error::BracketExhausted(hi));
        }
        if h(hi)? <= 0.0 {
            break;
        }
        step *= 2.0;
        hi = start + step;
    }
    let c_m = find_root_fallible(h, start, hi, &SolverConfig::tight())?;
    let u_m = u1(genus, c_m)?;
    Ok(TriplePoint { c_m, u_m })
}

/// Classify the systole candidates at a point of the reduced domain.
///
/// Outside the spine this reports the minimum among the four candidate
/// families rather than a certified systole; the reduction to four families
/// is only established on the reduced domain, which is why membership is a
/// precondition.
pub fn systole_report(genus: Genus, c: f64, t: f64, tie_tol: f64) -> Result<SystoleReport> {
    if tie_tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tie_tol must be positive, got {tie_tol}"
        )));
    }
    if !domain::in_f0(genus, c, t)? {
        return Err(Error::OutsideReducedDomain { c, t });
    }
    let lengths = FnPoint::new(genus, c, t)?.lengths()?;
    let sys_length = lengths.min();
    let systoles = CurveClass::ALL
        .iter()
        .copied()
        .filter(|k| lengths.get(*k) <= sys_length * (1.0 + tie_tol))
        .collect();
    Ok(SystoleReport {
        sys_length,
        systoles,
        lengths,
        tie_tol,
    })
}

/// Spine membership: within `tol` of either arc over its sub-junction range.
pub fn in_spine(genus: Genus, c: f64, u: f64, tol: f64) -> Result<bool> {
    if !domain::in_f0(genus, c, c * u)? {
        return Err(Error::OutsideReducedDomain { c, t: c * u });
    }
    let tp = triple_point(genus)?;
    let c1 = constants::c1(genus)?;
    let c0 = constants::c0(genus);
    let near = |lo: f64, arc: &dyn Fn(f64) -> Result<f64>| -> Result<bool> {
        if c < lo - tol || c > tp.c_m + tol {
            return Ok(false);
        }
        let cq = c.clamp(lo, tp.c_m);
        Ok((u - arc(cq)?).abs() <= tol)
    };
    Ok(near(c1, &|cq| u1(genus, cq))? || near(c0, &|cq| u0(genus, cq))?)
}

/// Sample one arc uniformly in c from its start up to min(c_hi, c_M).
pub fn trace_arc(genus: Genus, kind: ArcKind, c_hi: f64, n_samples: usize) -> Result<SpineArc> {
    if n_samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "n_samples must be at least 2, got {n_samples}"
        )));
    }
    if c_hi > geometry::C_MAX {
        return Err(Error::CuffOutOfWindow(c_hi));
    }
    let tp = triple_point(genus)?;
    let c_lo = match kind {
        ArcKind::BetaGamma => constants::c1(genus)?,
        ArcKind::AlphaGamma => constants::c0(genus),
    };
    let c_top = c_hi.min(tp.c_m);
    if c_top < c_lo {
        return Err(Error::InvalidArgument(format!(
            "c_hi = {c_hi} is below the arc start {c_lo}"
        )));
    }
    let mut samples = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let c = c_lo + (c_top - c_lo) * (i as f64) / ((n_samples - 1) as f64);
        let u = match kind {
            ArcKind::BetaGamma => u1(genus, c),
            ArcKind::AlphaGamma => u0(genus, c),
        }
        .map_err(|e| e.at_sample(i))?;
        samples.push(SlopePoint { genus, c, u });
    }
    Ok(SpineArc {
        kind,
        samples,
        c_range: (c_lo, c_top),
    })
}
