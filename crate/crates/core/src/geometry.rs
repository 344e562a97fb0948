//! Closed-form geodesic length functions and the dual Fenchel-Nielsen
//! coordinate change.
//!
//! The surfaces are genus-g hyperbolic surfaces glued from two (g+1)-holed
//! spheres with an order-(g+1) rotation. Their locus in Teichmüller space is a
//! 2-parameter curve carrying Fenchel-Nielsen coordinates (c, t), where the
//! cuff multi-curve γ has per-component length 2c and t is the twist. Four
//! curve families carry the candidate systoles:
//!
//!   ℓ_γ = 2c
//!   cosh(ℓ_α/4) = cosh(s/2)·cosh(t/2)
//!   cosh(ℓ_β/2) = cosh(s)·cosh(t/2)·cosh(c − t/2) − sinh(t/2)·sinh(c − t/2)
//!   cosh(ℓ_δ/(4g+4)) = cosh(s/2)·cosh((c − t)/2)   (g even; divisor 2g+2 odd)
//!
//! with the seam length s determined by cos(π/(g+1)) = sinh(c/2)·sinh(s/2).
//! Taking α as the cuff multi-curve instead of γ gives the dual coordinates
//! (c_α, t_α); the involution swapping the two coordinate systems is an
//! isometry of the curve.

use serde::Serialize;

use crate::error::{Error, Result};

/// Lower end of the supported cuff window; below it the seam length overflows.
pub const C_MIN: f64 = 1e-6;
/// Upper end of the supported cuff window; above it sinh/cosh cancellation
/// makes double precision meaningless.
pub const C_MAX: f64 = 50.0;

/// Boundary slack used when classifying points against closed domains.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Genus of the underlying surface, g ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus(g as u64));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// cos(π/(g+1)), the constant of the seam-cuff relation.
    pub fn angle_cosine(self) -> f64 {
        (std::f64::consts::PI / (self.0 as f64 + 1.0)).cos()
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

/// One of the four candidate curve families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CurveClass {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl CurveClass {
    pub const ALL: [CurveClass; 4] = [
        CurveClass::Alpha,
        CurveClass::Beta,
        CurveClass::Gamma,
        CurveClass::Delta,
    ];
}

/// Per-component geodesic length of each curve class at one point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LengthReport {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl LengthReport {
    pub fn get(&self, class: CurveClass) -> f64 {
        match class {
            CurveClass::Alpha => self.alpha,
            CurveClass::Beta => self.beta,
            CurveClass::Gamma => self.gamma,
            CurveClass::Delta => self.delta,
        }
    }

    /// Minimum over the four candidate families.
    pub fn min(&self) -> f64 {
        self.alpha.min(self.beta).min(self.gamma).min(self.delta)
    }
}

/// Derived quantities of the dual coordinate system at a point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DualCoords {
    /// Seam length with respect to the γ cuffs.
    pub s: f64,
    /// Half the α length; cuff parameter of the dual coordinate.
    pub c_alpha: f64,
    /// Twist of the dual coordinate; sign opposite to t, zero iff t = 0.
    pub t_alpha: f64,
    /// Seam length with respect to the α cuffs.
    pub s_alpha: f64,
}

/// A point of the Teichmüller curve in Fenchel-Nielsen coordinates.
///
/// `c` is half the cuff length (so ℓ_γ = 2c) and must lie in the numeric
/// window; `t` is the twist and may be any finite real.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FnPoint {
    genus: Genus,
    c: f64,
    t: f64,
}

fn check_window(c: f64) -> Result<f64> {
    if !(C_MIN..=C_MAX).contains(&c) || !c.is_finite() {
        return Err(Error::CuffOutOfWindow(c));
    }
    Ok(c)
}

/// arccosh with the argument clamped to 1 when rounding pushes it just below.
pub(crate) fn acosh_clamped(x: f64) -> Result<f64> {
    if x >= 1.0 {
        Ok(x.acosh())
    } else if x >= 1.0 - 1e-12 {
        Ok(0.0)
    } else {
        Err(Error::DualInconsistency(x))
    }
}

impl FnPoint {
    pub fn new(genus: Genus, c: f64, t: f64) -> Result<Self> {
        check_window(c)?;
        if !t.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "twist t = {t} is not finite"
            )));
        }
        Ok(FnPoint { genus, c, t })
    }

    pub fn genus(self) -> Genus {
        self.genus
    }

    pub fn c(self) -> f64 {
        self.c
    }

    pub fn t(self) -> f64 {
        self.t
    }

    /// Slope u = t/c.
    pub fn u(self) -> f64 {
        self.t / self.c
    }

    /// Seam length s of the two holed spheres making up the surface.
    pub fn seam(self) -> f64 {
        seam_from_cuff(self.genus, self.c)
    }

    /// Per-component geodesic length of one curve class.
    pub fn length(self, class: CurveClass) -> Result<f64> {
        match class {
            CurveClass::Gamma => Ok(2.0 * self.c),
            CurveClass::Alpha => Ok(alpha_length(self.genus, self.c, self.t)),
            CurveClass::Beta => {
                self.check_strip()?;
                Ok(beta_length_raw(self.genus, self.c, self.t))
            }
            CurveClass::Delta => {
                self.check_strip()?;
                Ok(delta_length_raw(self.genus, self.c, self.t))
            }
        }
    }

    /// All four lengths; requires 0 ≤ t ≤ c where the β and δ formulas hold.
    pub fn lengths(self) -> Result<LengthReport> {
        self.check_strip()?;
        Ok(LengthReport {
            alpha: alpha_length(self.genus, self.c, self.t),
            beta: beta_length_raw(self.genus, self.c, self.t),
            gamma: 2.0 * self.c,
            delta: delta_length_raw(self.genus, self.c, self.t),
        })
    }

    /// Dual Fenchel-Nielsen data (s, c_α, t_α, s_α).
    pub fn dual(self) -> Result<DualCoords> {
        let k = self.genus.angle_cosine();
        let s = seam_from_cuff(self.genus, self.c);
        let c_alpha = 2.0 * ((0.5 * s).cosh() * (0.5 * self.t).cosh()).acosh();
        let s_alpha = 2.0 * (k / (0.5 * c_alpha).sinh()).asinh();
        let t_alpha = if self.t == 0.0 {
            0.0
        } else {
            let mag = 2.0 * acosh_clamped((0.5 * self.c).cosh() / (0.5 * s_alpha).cosh())?;
            if self.t > 0.0 {
                -mag
            } else {
                mag
            }
        };
        Ok(DualCoords {
            s,
            c_alpha,
            t_alpha,
            s_alpha,
        })
    }

    /// The coordinate-swap involution: (c, t) ↦ (c_α, t_α). Order 2.
    pub fn involution(self) -> Result<FnPoint> {
        let d = self.dual()?;
        FnPoint::new(self.genus, d.c_alpha, d.t_alpha)
    }

    fn check_strip(self) -> Result<()> {
        if self.t < 0.0 || self.t > self.c {
            return Err(Error::TwistOutOfStrip {
                t: self.t,
                c: self.c,
            });
        }
        Ok(())
    }
}

/// Seam length s solving cos(π/(g+1)) = sinh(c/2)·sinh(s/2).
///
/// Strictly decreasing in c and strictly positive on the window.
pub fn seam_length(genus: Genus, c: f64) -> Result<f64> {
    check_window(c)?;
    Ok(seam_from_cuff(genus, c))
}

pub(crate) fn seam_from_cuff(genus: Genus, c: f64) -> f64 {
    2.0 * (genus.angle_cosine() / (0.5 * c).sinh()).asinh()
}

pub(crate) fn alpha_length(genus: Genus, c: f64, t: f64) -> f64 {
    let s = seam_from_cuff(genus, c);
    4.0 * ((0.5 * s).cosh() * (0.5 * t).cosh()).acosh()
}

/// β length from the strip formula. The argument of arccosh is
/// cosh(s)·cosh(t/2)·cosh(c−t/2) − sinh(t/2)·sinh(c−t/2) ≥ cosh(c−t) ≥ 1,
/// so the evaluation is total even slightly outside the strip; sign
/// preconditions are enforced by the public callers.
pub(crate) fn beta_length_raw(genus: Genus, c: f64, t: f64) -> f64 {
    let s = seam_from_cuff(genus, c);
    let th = 0.5 * t;
    let arg = s.cosh() * th.cosh() * (c - th).cosh() - th.sinh() * (c - th).sinh();
    2.0 * arg.acosh()
}

pub(crate) fn delta_length_raw(genus: Genus, c: f64, t: f64) -> f64 {
    let s = seam_from_cuff(genus, c);
    let half = ((0.5 * s).cosh() * (0.5 * (c - t)).cosh()).acosh();
    let divisor = if genus.is_even() {
        4.0 * (genus.get() as f64) + 4.0
    } else {
        2.0 * (genus.get() as f64) + 2.0
    };
    divisor * half
}

/// Per-component length of one curve class at (c, t).
///
/// γ and α accept any twist (α is even in t). β and δ require 0 ≤ t ≤ c;
/// points outside that strip must first be reduced into the fundamental
/// domain.
pub fn length(genus: Genus, c: f64, t: f64, class: CurveClass) -> Result<f64> {
    let p = FnPoint::new(genus, c, t)?;
    p.length(class)
}

/// ℓ_β on the diagonal t = c via 2·arccosh(2cos²(π/(g+1)) + cosh s).
///
/// Algebraically identical to `length(genus, c, c, Beta)`; kept as a separate
/// route because the constants solver roots it directly.
pub fn length_beta_diag(genus: Genus, c: f64) -> Result<f64> {
    check_window(c)?;
    let k = genus.angle_cosine();
    let s = seam_from_cuff(genus, c);
    Ok(2.0 * (2.0 * k * k + s.cosh()).acosh())
}

/// Dual coordinates at (c, t). See [`FnPoint::dual`].
pub fn dual_coords(genus: Genus, c: f64, t: f64) -> Result<DualCoords> {
    FnPoint::new(genus, c, t)?.dual()
}

/// The dual-swap involution at the coordinate level: returns (c_α, t_α).
pub fn involution_f(genus: Genus, c: f64, t: f64) -> Result<(f64, f64)> {
    let q = FnPoint::new(genus, c, t)?.involution()?;
    Ok((q.c(), q.t()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{find_root, SolverConfig};

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    const C0_G2: f64 = 1.3169578969248168;

    #[test]
    fn seam_self_dual_point_g2() {
        // sinh²(c/2) = cos(π/3) = 1/2 makes s = c.
        let s = seam_length(g(2), C0_G2).unwrap();
        assert!((s - C0_G2).abs() < 1e-12);
    }

    #[test]
    fn seam_matches_bisection_oracle_g2() {
        // Independent route: bisect sinh(c/2)·sinh(s/2) = 1/2 at c = 1.
        let cfg = SolverConfig {
            abs_tol: 1e-14,
            rel_tol: 0.0,
            max_iter: 200,
        };
        let oracle = find_root(
            |s: f64| 0.5f64.sinh() * (0.5 * s).sinh() - 0.5,
            1e-4,
            20.0,
            &cfg,
        )
        .unwrap();
        let s = seam_length(g(2), 1.0).unwrap();
        assert!((s - oracle).abs() < 1e-10);
        assert!((s - 1.7049128323580138).abs() < 1e-10);
    }

    #[test]
    fn seam_monotone_decreasing() {
        let s5 = seam_length(g(3), 5.0).unwrap();
        let s10 = seam_length(g(3), 10.0).unwrap();
        assert!(s10 < s5);
        assert!(s10 > 0.0);
    }

    #[test]
    fn seam_rejects_window_violations() {
        assert!(matches!(
            seam_length(g(2), 0.0),
            Err(Error::CuffOutOfWindow(_))
        ));
        assert!(matches!(
            seam_length(g(2), 51.0),
            Err(Error::CuffOutOfWindow(_))
        ));
        assert!(matches!(
            seam_length(g(2), f64::NAN),
            Err(Error::CuffOutOfWindow(_))
        ));
    }

    #[test]
    fn gamma_is_twice_c_for_any_twist() {
        assert_eq!(length(g(3), 1.0, 0.37, CurveClass::Gamma).unwrap(), 2.0);
        assert_eq!(length(g(3), 1.0, -4.2, CurveClass::Gamma).unwrap(), 2.0);
    }

    #[test]
    fn alpha_at_zero_twist_is_twice_seam() {
        for c in [0.3, 1.0, 2.7] {
            let s = seam_length(g(4), c).unwrap();
            let a = length(g(4), c, 0.0, CurveClass::Alpha).unwrap();
            assert!((a - 2.0 * s).abs() < 1e-12, "c = {c}");
        }
    }

    #[test]
    fn alpha_frozen_value() {
        let a = length(g(2), 1.0, 1.0, CurveClass::Alpha).unwrap();
        assert!((a - 4.066253280307897).abs() < 1e-12);
    }

    #[test]
    fn alpha_is_even_in_twist() {
        let a1 = length(g(2), 1.3, 0.8, CurveClass::Alpha).unwrap();
        let a2 = length(g(2), 1.3, -0.8, CurveClass::Alpha).unwrap();
        assert_eq!(a1, a2);
    }

    #[test]
    fn beta_frozen_value_at_zero_twist() {
        let b = length(g(2), 1.0, 0.0, CurveClass::Beta).unwrap();
        assert!((b - 4.315879814969434).abs() < 1e-12);
    }

    #[test]
    fn beta_rejects_twist_outside_strip() {
        assert!(matches!(
            length(g(2), 1.0, 1.5, CurveClass::Beta),
            Err(Error::TwistOutOfStrip { .. })
        ));
        assert!(matches!(
            length(g(2), 1.0, -0.1, CurveClass::Delta),
            Err(Error::TwistOutOfStrip { .. })
        ));
    }

    #[test]
    fn beta_diag_agrees_with_strip_formula() {
        for c in [0.4, 1.0, 1.465, 3.0] {
            let d = length_beta_diag(g(2), c).unwrap();
            let b = length(g(2), c, c, CurveClass::Beta).unwrap();
            assert!((d - b).abs() <= 1e-10 * d.abs(), "c = {c}: {d} vs {b}");
        }
    }

    #[test]
    fn beta_diag_blows_up_for_small_cuff() {
        let near = length_beta_diag(g(3), 0.1).unwrap();
        let nearer = length_beta_diag(g(3), 0.01).unwrap();
        assert!(nearer > near);
    }

    #[test]
    fn beta_diag_defining_property_of_c1() {
        // At c₁ the diagonal β length equals ℓ_γ = 2c.
        let c1 = 1.4657153519472905;
        let b = length_beta_diag(g(2), c1).unwrap();
        assert!((b - 2.0 * c1).abs() < 1e-9);
    }

    #[test]
    fn delta_collapses_at_full_twist_even_genus() {
        for c in [0.7, 1.3] {
            let s = seam_length(g(2), c).unwrap();
            let d = length(g(2), c, c, CurveClass::Delta).unwrap();
            assert!((d - 6.0 * s).abs() < 1e-11, "c = {c}");
        }
    }

    #[test]
    fn delta_divisor_depends_on_parity() {
        // Same arccosh factor, divisor 4g+4 for even g and 2g+2 for odd g.
        let arg = |gen: Genus, c: f64| {
            let s = seam_from_cuff(gen, c);
            ((0.5 * s).cosh() * (0.5 * c / 2.0).cosh()).acosh()
        };
        let d2 = length(g(2), 1.0, 0.5, CurveClass::Delta).unwrap();
        assert!((d2 - 12.0 * arg(g(2), 1.0)).abs() < 1e-12);
        let d3 = length(g(3), 1.0, 0.5, CurveClass::Delta).unwrap();
        assert!((d3 - 8.0 * arg(g(3), 1.0)).abs() < 1e-12);
    }

    #[test]
    fn dual_self_dual_point() {
        let d = dual_coords(g(2), C0_G2, 0.0).unwrap();
        assert!((d.c_alpha - C0_G2).abs() < 1e-9);
        assert_eq!(d.t_alpha, 0.0);
        assert!((d.s - d.s_alpha).abs() < 1e-9);
    }

    #[test]
    fn dual_twist_sign_is_opposite() {
        let d = dual_coords(g(3), 2.0, 0.5).unwrap();
        assert!(d.t_alpha < 0.0);
        let d = dual_coords(g(3), 2.0, -0.5).unwrap();
        assert!(d.t_alpha > 0.0);
    }

    #[test]
    fn dual_zero_twist_maps_to_zero() {
        for c in [0.3, 1.0, 4.0] {
            let d = dual_coords(g(5), c, 0.0).unwrap();
            assert_eq!(d.t_alpha, 0.0);
        }
    }

    #[test]
    fn dual_relations_hold() {
        let gen = g(3);
        let k = gen.angle_cosine();
        let (c, t) = (1.4, 0.9);
        let d = dual_coords(gen, c, t).unwrap();
        assert!((k - (0.5 * c).sinh() * (0.5 * d.s).sinh()).abs() < 1e-12);
        assert!(((0.5 * d.c_alpha).cosh() - (0.5 * d.s).cosh() * (0.5 * t).cosh()).abs() < 1e-12);
        assert!((k - (0.5 * d.c_alpha).sinh() * (0.5 * d.s_alpha).sinh()).abs() < 1e-12);
        assert!(
            ((0.5 * c).cosh() - (0.5 * d.s_alpha).cosh() * (0.5 * d.t_alpha).cosh()).abs() < 1e-12
        );
    }

    #[test]
    fn involution_has_order_two() {
        let (c1, t1) = involution_f(g(2), 1.7, 0.4).unwrap();
        assert!((c1 - 1.0861621807608646).abs() < 1e-10);
        assert!((t1 - -0.565350967305857).abs() < 1e-10);
        let (c2, t2) = involution_f(g(2), c1, t1).unwrap();
        assert!((c2 - 1.7).abs() < 1e-9);
        assert!((t2 - 0.4).abs() < 1e-9);
    }

    #[test]
    fn involution_fixes_self_dual_point() {
        let (c, t) = involution_f(g(2), C0_G2, 0.0).unwrap();
        assert!((c - C0_G2).abs() < 1e-9);
        assert_eq!(t, 0.0);
    }

    #[test]
    fn involution_flips_twist_sign() {
        let (_, t) = involution_f(g(3), 1.0, 0.2).unwrap();
        assert!(t < 0.0);
    }

    #[test]
    fn boundary_order_relations() {
        // At t = 0: ℓ_α < ℓ_β and ℓ_γ < ℓ_β. At t = c: ℓ_α > ℓ_β.
        for c in [0.05, 0.5, 1.4, 6.0] {
            let at0 = FnPoint::new(g(2), c, 0.0).unwrap().lengths().unwrap();
            assert!(at0.alpha < at0.beta, "c = {c}");
            assert!(at0.gamma < at0.beta, "c = {c}");
            let atc = FnPoint::new(g(2), c, c).unwrap().lengths().unwrap();
            assert!(atc.alpha > atc.beta, "c = {c}");
        }
    }

    #[test]
    fn tanh_cross_identity() {
        for (c, t) in [(0.8, 0.3), (2.0, 1.5), (4.0, -2.0)] {
            let d = dual_coords(g(2), c, t).unwrap();
            let lhs = (0.5 * d.t_alpha.abs()).tanh() / (0.5 * c).tanh();
            let rhs = (0.5 * t.abs()).tanh() / (0.5 * d.c_alpha).tanh();
            assert!((lhs - rhs).abs() < 1e-12, "({c}, {t})");
        }
    }
}
