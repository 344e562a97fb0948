//! Numeric certification battery.
//!
//! Every quantitative statement the crate relies on is registered here as a
//! claim: an executable check returning a pass/fail verdict, the worst
//! residual or violation seen, and a witness point where applicable. Claims
//! are deterministic given the configured seed.

use serde::Serialize;

use crate::constants;
use crate::domain::{self, Letter, Word};
use crate::error::{Error, Result};
use crate::geometry::{self, CurveClass, FnPoint, Genus};
use crate::spine::{self, ArcKind};

/// Outcome of one claim at one genus.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub genus: u32,
    pub passed: bool,
    /// Violation magnitude for inequality claims, worst |residual| for
    /// equality claims; 0 when the claim holds with margin.
    pub worst_residual: f64,
    /// Extremal or offending point (c, t), when the claim has one.
    pub witness: Option<(f64, f64)>,
    pub details: String,
}

/// Configuration of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub genus_list: Vec<u32>,
    pub grid_n: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            genus_list: vec![2, 3, 5],
            grid_n: 200,
            seed: 0,
        }
    }
}

impl VerifyConfig {
    fn validate(&self) -> Result<()> {
        if self.grid_n < 8 {
            return Err(Error::InvalidArgument(format!(
                "grid_n must be at least 8, got {}",
                self.grid_n
            )));
        }
        if self.genus_list.is_empty() {
            return Err(Error::InvalidArgument("genus list is empty".into()));
        }
        Ok(())
    }
}

/// Standard c-grid shared by the sweep claims. The top stays at 10 because
/// several certified gaps (for instance the clearance of the full-twist line
/// from the dual edges) decay like e^{−c} and drop under double-precision
/// resolution long before the window cap.
const GRID_C_LO: f64 = 0.05;
const GRID_C_HI: f64 = 10.0;

/// SplitMix64: tiny deterministic generator so claim reports are reproducible
/// independent of external crates.
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub(crate) fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub(crate) fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

type ClaimFn = fn(Genus, &VerifyConfig) -> Result<ClaimResult>;

/// Which genus a claim applies to.
enum Applies {
    All,
    Only(u32),
}

struct ClaimSpec {
    id: &'static str,
    applies: Applies,
    run: ClaimFn,
}

/// Registry ordered by claim id.
#[rustfmt::skip]
const REGISTRY: &[ClaimSpec] = &[
    ClaimSpec { id: "arc_endpoints", applies: Applies::All, run: claim_arc_endpoints },
    ClaimSpec { id: "arc_junction", applies: Applies::All, run: claim_arc_junction },
    ClaimSpec { id: "arc_residuals", applies: Applies::All, run: claim_arc_residuals },
    ClaimSpec { id: "boundary_inequalities", applies: Applies::All, run: claim_boundary_inequalities },
    ClaimSpec { id: "c_half_bound_g3", applies: Applies::Only(3), run: claim_c_half_bound_g3 },
    ClaimSpec { id: "c_half_bound_g5", applies: Applies::Only(5), run: claim_c_half_bound_g5 },
    ClaimSpec { id: "constants_residuals", applies: Applies::All, run: claim_constants_residuals },
    ClaimSpec { id: "delta_exclusion_g3", applies: Applies::Only(3), run: claim_delta_exclusion },
    ClaimSpec { id: "delta_exclusion_g5", applies: Applies::Only(5), run: claim_delta_exclusion },
    ClaimSpec { id: "delta_on_spine", applies: Applies::All, run: claim_delta_on_spine },
    ClaimSpec { id: "dual_involution", applies: Applies::All, run: claim_dual_involution },
    ClaimSpec { id: "dual_sign", applies: Applies::All, run: claim_dual_sign },
    ClaimSpec { id: "dual_zero", applies: Applies::All, run: claim_dual_zero },
    ClaimSpec { id: "l1_disjointness", applies: Applies::All, run: claim_l1_disjointness },
    ClaimSpec { id: "no_bc_solution_below_c1", applies: Applies::All, run: claim_no_bc_below_c1 },
    ClaimSpec { id: "reduction_roundtrip", applies: Applies::All, run: claim_reduction_roundtrip },
    ClaimSpec { id: "sign_partials", applies: Applies::All, run: claim_sign_partials },
    ClaimSpec { id: "spine_side_conditions", applies: Applies::All, run: claim_spine_side_conditions },
    ClaimSpec { id: "tanh_identity", applies: Applies::All, run: claim_tanh_identity },
    ClaimSpec { id: "triple_local_max", applies: Applies::All, run: claim_triple_local_max },
];

/// All registered claim ids, in report order.
pub fn claim_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

/// Run the full battery for every genus in the configuration.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<ClaimResult>> {
    cfg.validate()?;
    let mut results = Vec::new();
    for spec in REGISTRY {
        results.extend(run_spec(spec, cfg)?);
    }
    Ok(results)
}

/// Run a single claim by id.
pub fn run_claim(claim_id: &str, cfg: &VerifyConfig) -> Result<Vec<ClaimResult>> {
    cfg.validate()?;
    let spec = REGISTRY
        .iter()
        .find(|s| s.id == claim_id)
        .ok_or_else(|| Error::UnknownClaim(claim_id.to_string()))?;
    let results = run_spec(spec, cfg)?;
    if results.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "claim '{claim_id}' does not apply to any genus in {:?}",
            cfg.genus_list
        )));
    }
    Ok(results)
}

fn run_spec(spec: &ClaimSpec, cfg: &VerifyConfig) -> Result<Vec<ClaimResult>> {
    let mut genus_list: Vec<u32> = cfg
        .genus_list
        .iter()
        .copied()
        .filter(|g| match spec.applies {
            Applies::All => true,
            Applies::Only(n) => *g == n,
        })
        .collect();
    genus_list.sort_unstable();
    genus_list.dedup();
    let mut out = Vec::new();
    for g in genus_list {
        let genus = Genus::new(g)?;
        out.push((spec.run)(genus, cfg)?);
    }
    Ok(out)
}

fn result(
    id: &str,
    genus: Genus,
    passed: bool,
    worst: f64,
    witness: Option<(f64, f64)>,
    details: String,
) -> ClaimResult {
    ClaimResult {
        claim_id: id.to_string(),
        genus: genus.get(),
        passed,
        worst_residual: worst,
        witness,
        details,
    }
}

fn c_grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| GRID_C_LO + (GRID_C_HI - GRID_C_LO) * (i as f64) / ((n - 1) as f64))
}

// --- coordinate-change claims -------------------------------------------------

/// Seeded sample of points with |t| bounded away from the dual twist's
/// arccosh resolution floor; every tenth point carries t = 0 exactly.
fn sample_points(genus: Genus, seed: u64, n: usize) -> Vec<(f64, f64)> {
    let mut rng = SplitMix64::new(seed ^ (genus.get() as u64) << 32);
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        if pts.len() % 10 == 9 {
            let c = rng.range(0.2, 8.0);
            pts.push((c, 0.0));
            continue;
        }
        let c = rng.range(0.2, 8.0);
        let t = rng.range(-2.0, 2.0) * c;
        if t.abs() < 1e-3 {
            continue;
        }
        pts.push((c, t));
    }
    pts
}

fn claim_dual_involution(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut worst = 0.0f64;
    let mut witness = None;
    for (c, t) in sample_points(genus, cfg.seed, 1000) {
        let (c1, t1) = geometry::involution_f(genus, c, t)?;
        let (c2, t2) = geometry::involution_f(genus, c1, t1)?;
        let scale = 1.0f64.max(c.abs()).max(t.abs());
        let resid = ((c2 - c).abs()).max((t2 - t).abs()) / scale;
        if resid > worst {
            worst = resid;
            witness = Some((c, t));
        }
    }
    let passed = worst < 1e-9;
    Ok(result(
        "dual_involution",
        genus,
        passed,
        worst,
        witness,
        format!(
            "f∘f = id over 1000 seeded points (seed {}), residual relative to max(1, c, |t|)",
            cfg.seed
        ),
    ))
}

fn claim_tanh_identity(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut worst = 0.0f64;
    let mut witness = None;
    for (c, t) in sample_points(genus, cfg.seed, 1000) {
        let d = geometry::dual_coords(genus, c, t)?;
        let lhs = (0.5 * d.t_alpha.abs()).tanh() / (0.5 * c).tanh();
        let rhs = (0.5 * t.abs()).tanh() / (0.5 * d.c_alpha).tanh();
        let resid = (lhs - rhs).abs();
        if resid > worst {
            worst = resid;
            witness = Some((c, t));
        }
    }
    let passed = worst < 1e-9;
    Ok(result(
        "tanh_identity",
        genus,
        passed,
        worst,
        witness,
        format!(
            "tanh(|t_α|/2)/tanh(c/2) = tanh(|t|/2)/tanh(c_α/2), 1000 seeded points (seed {})",
            cfg.seed
        ),
    ))
}

fn claim_dual_sign(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut violations = 0usize;
    let mut witness = None;
    for (c, t) in sample_points(genus, cfg.seed, 1000) {
        if t == 0.0 {
            continue;
        }
        let d = geometry::dual_coords(genus, c, t)?;
        let opposite = t * d.t_alpha < 0.0;
        if !opposite {
            violations += 1;
            witness = witness.or(Some((c, t)));
        }
    }
    Ok(result(
        "dual_sign",
        genus,
        violations == 0,
        violations as f64,
        witness,
        "t·t_α < 0 for every sampled t ≠ 0".into(),
    ))
}

fn claim_dual_zero(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut violations = 0usize;
    let mut witness = None;
    for (c, t) in sample_points(genus, cfg.seed, 1000) {
        let d = geometry::dual_coords(genus, c, t)?;
        let ok = if t == 0.0 {
            d.t_alpha == 0.0
        } else {
            d.t_alpha != 0.0
        };
        if !ok {
            violations += 1;
            witness = witness.or(Some((c, t)));
        }
    }
    Ok(result(
        "dual_zero",
        genus,
        violations == 0,
        violations as f64,
        witness,
        "t = 0 ⇔ t_α = 0 on the sample (zero cases included)".into(),
    ))
}

// --- length-function claims ---------------------------------------------------

fn claim_sign_partials(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let n = cfg.grid_n;
    let mut worst = 0.0f64;
    let mut witness = None;
    let mut bad = 0usize;
    for c in c_grid(n) {
        let h = 1e-6 * 1.0f64.max(c);
        for j in 1..=n {
            let u = j as f64 / n as f64;
            let t = u * c;
            // α in t: valid for any twist.
            let da_dt = (geometry::alpha_length(genus, c, t + h)
                - geometry::alpha_length(genus, c, t - h))
                / (2.0 * h);
            // α in c.
            let da_dc = (geometry::alpha_length(genus, c + h, t)
                - geometry::alpha_length(genus, c - h, t))
                / (2.0 * h);
            // β in t: the formula is stated on 0 ≤ t ≤ c and is symmetric
            // about t = c (derivative exactly zero there), so keep the
            // stencil inside the strip.
            let tb = t.clamp(h, c - h);
            let db_dt = (geometry::beta_length_raw(genus, c, tb + h)
                - geometry::beta_length_raw(genus, c, tb - h))
                / (2.0 * h);
            let viol = (-da_dt).max(da_dc).max(db_dt).max(0.0);
            if viol > 0.0 {
                bad += 1;
                if viol > worst {
                    worst = viol;
                    witness = Some((c, t));
                }
            }
        }
    }
    Ok(result(
        "sign_partials",
        genus,
        bad == 0,
        worst,
        witness,
        format!(
            "∂ℓ_α/∂t > 0, ∂ℓ_α/∂c < 0, ∂ℓ_β/∂t < 0 by central differences on a {n}×{n} grid, c ∈ [{GRID_C_LO}, {GRID_C_HI}], 0 < u ≤ 1; β stencil clamped into the strip"
        ),
    ))
}

fn claim_boundary_inequalities(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut worst = 0.0f64;
    let mut witness = None;
    for c in c_grid(cfg.grid_n) {
        let at0 = FnPoint::new(genus, c, 0.0)?.lengths()?;
        let atc = FnPoint::new(genus, c, c)?.lengths()?;
        let viol = (at0.alpha - at0.beta)
            .max(at0.gamma - at0.beta)
            .max(atc.beta - atc.alpha)
            .max(0.0);
        if viol > worst {
            worst = viol;
            witness = Some((c, 0.0));
        }
    }
    Ok(result(
        "boundary_inequalities",
        genus,
        worst == 0.0,
        worst,
        witness,
        "ℓ_α < ℓ_β and ℓ_γ < ℓ_β at t = 0; ℓ_α > ℓ_β at t = c, over the standard c-grid".into(),
    ))
}

fn claim_no_bc_below_c1(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let c1 = constants::c1(genus)?;
    let n = cfg.grid_n;
    let hi = c1 - 1e-6;
    let mut min_gap = f64::INFINITY;
    let mut witness = None;
    for i in 0..n {
        let c = GRID_C_LO + (hi - GRID_C_LO) * (i as f64) / ((n - 1) as f64);
        for j in 0..=n {
            let t = c * (j as f64 / n as f64);
            let gap = geometry::beta_length_raw(genus, c, t) - 2.0 * c;
            if gap < min_gap {
                min_gap = gap;
                witness = Some((c, t));
            }
        }
    }
    Ok(result(
        "no_bc_solution_below_c1",
        genus,
        min_gap > 0.0,
        (-min_gap).max(0.0),
        witness,
        format!("min(ℓ_β − ℓ_γ) = {min_gap:.3e} on the strip grid below c₁ = {c1:.12}"),
    ))
}

// --- constants claims ----------------------------------------------------------

fn claim_constants_residuals(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let k = constants::genus_constants(genus)?;
    let ang = genus.angle_cosine();
    let r0 = ((0.5 * k.c0).sinh().powi(2) - ang).abs();
    let r1 = (geometry::length_beta_diag(genus, k.c1)? - 2.0 * k.c1).abs();
    let cc = (0.5 * k.c_half).cosh();
    let r_half = ((cc - 1.0).powi(2) * (2.0 * cc + 1.0) / (2.0 * cc - 1.0) - ang * ang).abs();
    let triangle = (spine::u1(genus, k.c_half)? - 0.5).abs();
    let worst = r0.max(r1).max(r_half);
    let passed = worst <= 1e-10 && triangle <= 1e-9;
    Ok(result(
        "constants_residuals",
        genus,
        passed,
        worst.max(triangle),
        None,
        format!(
            "defining residuals: c₀ {r0:.2e}, c₁ {r1:.2e}, c_½ {r_half:.2e}; u₁(c_½) − 1/2 = {triangle:.2e}"
        ),
    ))
}

fn claim_c_half_bound_g3(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let ch = constants::c_half(genus)?;
    let cc = (0.5 * ch).cosh();
    let dev = (cc - 1.5).abs();
    let passed = dev < 1e-12 && ch < 1.925;
    Ok(result(
        "c_half_bound_g3",
        genus,
        passed,
        dev.max((ch - 1.925).max(0.0)),
        None,
        format!("C = {cc:.15} (target 3/2), c_½ = {ch:.15} < 1.925"),
    ))
}

fn claim_c_half_bound_g5(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut worst = 0.0f64;
    let mut prev = 0.0f64;
    let mut passed = true;
    for g in 5..=50u32 {
        let ch = constants::c_half(Genus::new(g)?)?;
        if ch >= 2.318 {
            passed = false;
            worst = worst.max(ch - 2.318);
        }
        if g > 5 && ch <= prev {
            passed = false;
            worst = worst.max(prev - ch);
        }
        prev = ch;
    }
    Ok(result(
        "c_half_bound_g5",
        genus,
        passed,
        worst,
        None,
        "c_½(g) < 2.318 and strictly increasing for g = 5..50".into(),
    ))
}

// --- spine claims ---------------------------------------------------------------

fn traced(genus: Genus, kind: ArcKind, n: usize) -> Result<spine::SpineArc> {
    let tp = spine::triple_point(genus)?;
    spine::trace_arc(genus, kind, tp.c_m, n)
}

fn claim_arc_endpoints(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let tp = spine::triple_point(genus)?;
    let bg = traced(genus, ArcKind::BetaGamma, 256)?;
    let ag = traced(genus, ArcKind::AlphaGamma, 256)?;
    let c1 = constants::c1(genus)?;
    let c0 = constants::c0(genus);
    let worst = (bg.samples[0].u - 1.0)
        .abs()
        .max(bg.samples[0].c - c1)
        .max(ag.samples[0].u.abs())
        .max(ag.samples[0].c - c0)
        .max((bg.samples[255].u - tp.u_m).abs())
        .max((ag.samples[255].u - tp.u_m).abs());
    Ok(result(
        "arc_endpoints",
        genus,
        worst < 1e-9,
        worst,
        None,
        "u₁(c₁) = 1, u₀(c₀) = 0, both arcs end at (c_M, u_M)".into(),
    ))
}

fn claim_arc_residuals(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut worst = 0.0f64;
    let mut witness = None;
    for (kind, class) in [
        (ArcKind::BetaGamma, CurveClass::Beta),
        (ArcKind::AlphaGamma, CurveClass::Alpha),
    ] {
        let arc = traced(genus, kind, 256)?;
        for p in &arc.samples {
            let resid = (geometry::length(genus, p.c, p.t(), class)? - 2.0 * p.c).abs();
            if resid > worst {
                worst = resid;
                witness = Some((p.c, p.t()));
            }
        }
    }
    Ok(result(
        "arc_residuals",
        genus,
        worst < 1e-9,
        worst,
        witness,
        "per-sample tie residual |ℓ − ℓ_γ| over both 256-sample arcs".into(),
    ))
}

fn claim_arc_junction(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let tp = spine::triple_point(genus)?;
    let gap = (spine::u1(genus, tp.c_m)? - spine::u0(genus, tp.c_m)?).abs();
    Ok(result(
        "arc_junction",
        genus,
        gap < 1e-9,
        gap,
        Some((tp.c_m, tp.c_m * tp.u_m)),
        format!("|u₁(c_M) − u₀(c_M)| at c_M = {:.12}", tp.c_m),
    ))
}

fn claim_spine_side_conditions(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let tp = spine::triple_point(genus)?;
    let mut worst = 0.0f64;
    let mut witness = None;
    for kind in [ArcKind::BetaGamma, ArcKind::AlphaGamma] {
        let arc = traced(genus, kind, 256)?;
        for p in &arc.samples {
            if p.c >= tp.c_m - 1e-9 {
                continue;
            }
            let l = FnPoint::new(genus, p.c, p.t())?.lengths()?;
            // On the β = γ arc the α curve must stay strictly longer, and
            // symmetrically on the α = γ arc.
            let viol = match kind {
                ArcKind::BetaGamma => l.gamma - l.alpha,
                ArcKind::AlphaGamma => l.gamma - l.beta,
            };
            if viol >= 0.0 {
                let v = viol.max(1e-300);
                if v > worst {
                    worst = v;
                    witness = Some((p.c, p.t()));
                }
            }
        }
    }
    Ok(result(
        "spine_side_conditions",
        genus,
        witness.is_none(),
        worst,
        witness,
        "strict inequalities ℓ_β = ℓ_γ < ℓ_α and ℓ_α = ℓ_γ < ℓ_β for c < c_M".into(),
    ))
}

fn claim_delta_on_spine(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut min_margin = f64::INFINITY;
    let mut witness = None;
    for kind in [ArcKind::BetaGamma, ArcKind::AlphaGamma] {
        let arc = traced(genus, kind, 256)?;
        for p in &arc.samples {
            let l = FnPoint::new(genus, p.c, p.t())?.lengths()?;
            let margin = l.delta - l.min();
            if margin < min_margin {
                min_margin = margin;
                witness = Some((p.c, p.t()));
            }
        }
    }
    Ok(result(
        "delta_on_spine",
        genus,
        min_margin > 0.0,
        (-min_margin).max(0.0),
        witness,
        format!("δ clears the systole by at least {min_margin:.6} on every traced sample"),
    ))
}

fn claim_delta_exclusion(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let (delta_bound, gamma_bound) = match genus.get() {
        3 => (4.77, 3.85),
        5 => (6.85, 4.64),
        g => {
            return Err(Error::InvalidArgument(format!(
                "delta exclusion bounds are stated for genus 3 and 5, not {g}"
            )))
        }
    };
    let id = if genus.get() == 3 {
        "delta_exclusion_g3"
    } else {
        "delta_exclusion_g5"
    };
    let c1 = constants::c1(genus)?;
    let c_half = constants::c_half(genus)?;
    // Region {u ≥ 1/2} ∩ {c ≤ c₁ or u ≤ u₁(c)}; every such point has
    // c ≤ c_½, so the closed grid stops there. 200×200 per the stated bound.
    let n = 200;
    let mut min_delta = f64::INFINITY;
    let mut max_gamma = 0.0f64;
    let mut wit_delta = (0.0, 0.0);
    let mut wit_gamma = (0.0, 0.0);
    for i in 0..n {
        let c = GRID_C_LO + (c_half - GRID_C_LO) * (i as f64) / ((n - 1) as f64);
        let u_cap = if c > c1 { spine::u1(genus, c)? } else { 1.0 };
        for j in 0..n {
            let u = 0.5 + 0.5 * (j as f64) / ((n - 1) as f64);
            if !(c <= c1 || u <= u_cap + 1e-9) {
                continue;
            }
            let t = u * c;
            let ld = geometry::delta_length_raw(genus, c, t);
            let lg = 2.0 * c;
            if ld < min_delta {
                min_delta = ld;
                wit_delta = (c, t);
            }
            if lg > max_gamma {
                max_gamma = lg;
                wit_gamma = (c, t);
            }
        }
    }
    let viol = (delta_bound - min_delta)
        .max(max_gamma - gamma_bound)
        .max(0.0);
    let passed = min_delta >= delta_bound && max_gamma <= gamma_bound;
    Ok(result(
        id,
        genus,
        passed,
        viol,
        Some(if delta_bound - min_delta > max_gamma - gamma_bound { wit_delta } else { wit_gamma }),
        format!(
            "200×200 region grid: min ℓ_δ = {min_delta:.6} (≥ {delta_bound}), max ℓ_γ = {max_gamma:.6} (≤ {gamma_bound})"
        ),
    ))
}

fn claim_triple_local_max(genus: Genus, _cfg: &VerifyConfig) -> Result<ClaimResult> {
    let tp = spine::triple_point(genus)?;
    let sys0 = FnPoint::new(genus, tp.c_m, tp.c_m * tp.u_m)?
        .lengths()?
        .min();
    let r = 1e-3;
    let mut worst = 0.0f64;
    let mut witness = None;
    for k in 0..8 {
        let ang = std::f64::consts::PI * (k as f64) / 4.0;
        let c = tp.c_m + r * ang.cos();
        let u = tp.u_m + r * ang.sin();
        let sys = FnPoint::new(genus, c, u * c)?.lengths()?.min();
        let excess = sys - sys0;
        if excess > worst {
            worst = excess;
            witness = Some((c, u * c));
        }
    }
    Ok(result(
        "triple_local_max",
        genus,
        worst <= 1e-8,
        worst,
        witness,
        format!("8 neighbors at radius 1e-3 in (c, u); systole at the junction = {sys0:.12}"),
    ))
}

// --- group action claims ---------------------------------------------------------

/// Seeded interior point of F₀ with margins off every face.
fn sample_f0_interior(genus: Genus, rng: &mut SplitMix64) -> Result<(f64, f64)> {
    let tp = spine::triple_point(genus)?;
    for _ in 0..10_000 {
        let c = rng.range(0.1, tp.c_m + 1.0);
        let u = rng.range(0.02, 0.98);
        let t = u * c;
        let d = geometry::dual_coords(genus, c, t)?;
        if t > 1e-3 && c < d.c_alpha - 1e-3 && d.t_alpha.abs() < d.c_alpha - 1e-3 {
            return Ok((c, t));
        }
    }
    Err(Error::InvalidArgument("interior sampling failed".into()))
}

/// Seeded word whose trajectory from `base` stays inside the cuff window.
fn sample_word(genus: Genus, rng: &mut SplitMix64, base: (f64, f64)) -> Result<(Word, (f64, f64))> {
    'retry: for _ in 0..10_000 {
        let len = 1 + (rng.next_u64() % 12) as usize;
        let letters: Vec<Letter> = (0..len)
            .map(|_| Letter::ALL[(rng.next_u64() % 6) as usize])
            .collect();
        let word = Word(letters);
        let mut cur = base;
        for l in &word.0 {
            match domain::apply_letter(genus, *l, cur.0, cur.1) {
                Ok(next) => cur = next,
                // Twisting can run the cuff out of the numeric window; such
                // words are not representable and get redrawn.
                Err(Error::CuffOutOfWindow(_)) => continue 'retry,
                Err(e) => return Err(e),
            }
        }
        return Ok((word, cur));
    }
    Err(Error::InvalidArgument("word sampling failed".into()))
}

fn claim_reduction_roundtrip(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut rng = SplitMix64::new(cfg.seed.wrapping_add(0xD1CE) ^ (genus.get() as u64));
    let mut worst = 0.0f64;
    let mut witness = None;
    let mut identity_failures = 0usize;
    for _ in 0..100 {
        let base = sample_f0_interior(genus, &mut rng)?;
        // In-domain points must reduce by the identity word.
        let r0 = domain::reduce_to_f0(genus, base.0, base.1, 100_000)?;
        if !r0.word.is_empty() {
            identity_failures += 1;
            continue;
        }
        let (word, moved) = sample_word(genus, &mut rng, base)?;
        let red = domain::reduce_to_f0(genus, moved.0, moved.1, 100_000)?;
        // The reduction word really acts as the inverse of the sampled word.
        let (replayed, _) = domain::apply_word(genus, &red.word, moved.0, moved.1)?;
        let err = (red.c - base.0)
            .abs()
            .max((red.t - base.1).abs())
            .max((replayed.0 - red.c).abs())
            .max((replayed.1 - red.t).abs());
        if err > worst {
            worst = err;
            witness = Some(base);
        }
        let _ = word;
    }
    let passed = worst < 1e-8 && identity_failures == 0;
    Ok(result(
        "reduction_roundtrip",
        genus,
        passed,
        worst,
        witness,
        format!(
            "100 seeded words of length ≤ 12 (seed {}); {identity_failures} identity failures",
            cfg.seed
        ),
    ))
}

fn claim_l1_disjointness(genus: Genus, cfg: &VerifyConfig) -> Result<ClaimResult> {
    let mut min_gap = f64::INFINITY;
    let mut witness = None;
    for c in c_grid(cfg.grid_n) {
        let d = geometry::dual_coords(genus, c, c)?;
        let gap = d.c_alpha - d.t_alpha.abs();
        if gap < min_gap {
            min_gap = gap;
            witness = Some((c, c));
        }
    }
    Ok(result(
        "l1_disjointness",
        genus,
        min_gap > 0.0,
        (-min_gap).max(0.0),
        witness,
        format!("min(c_α − |t_α|) = {min_gap:.3e} along t = c over the standard c-grid"),
    ))
}
