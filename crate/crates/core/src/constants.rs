//! Genus-dependent constants of the systole landscape.
//!
//! Three cuff values organize everything: c₀, where α and γ tie on the zero
//! twist line; c₁, where β and γ tie on the full twist diagonal; and c_½, the
//! unique cuff where the β = γ arc crosses slope one half.

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{self, Genus};
use crate::solver::{expand_bracket_up, find_root, find_root_fallible, SolverConfig};

/// The three constants at one genus.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GenusConstants {
    pub c0: f64,
    pub c1: f64,
    pub c_half: f64,
}

/// Cuff value with ℓ_α = ℓ_γ at zero twist: c₀ = 2·arcsinh(√cos(π/(g+1))).
///
/// At (c₀, 0) the point is self-dual, c = c_α.
pub fn c0(genus: Genus) -> f64 {
    2.0 * genus.angle_cosine().sqrt().asinh()
}

/// Unique root of cosh(c) = 2cos²(π/(g+1)) + cosh(s(c)): the cuff with
/// ℓ_β(c, c) = ℓ_γ(c, c). The left side is increasing and the right side
/// decreasing in c, so the first sign change brackets the only root.
pub fn c1(genus: Genus) -> Result<f64> {
    let k = genus.angle_cosine();
    let f = |c: f64| -> Result<f64> {
        Ok(c.cosh() - 2.0 * k * k - geometry::seam_length(genus, c)?.cosh())
    };
    let (lo, hi) = expand_bracket_up(f, 0.1, 1.0, geometry::C_MAX)?;
    find_root_fallible(f, lo, hi, &SolverConfig::tight())
}

/// Unique cuff with u₁(c) = 1/2, via the polynomial form
/// (C−1)²(2C+1)/(2C−1) = cos²(π/(g+1)) in C = cosh(c/2).
///
/// dL/dC > 0 for C > 1 makes the root unique; L(1.75) > 1 ≥ cos² bounds it.
pub fn c_half(genus: Genus) -> Result<f64> {
    let target = genus.angle_cosine().powi(2);
    let level = |cc: f64| (cc - 1.0).powi(2) * (2.0 * cc + 1.0) / (2.0 * cc - 1.0) - target;
    let cc = find_root(level, 1.0 + 1e-12, 1.75, &SolverConfig::tight())?;
    Ok(2.0 * cc.acosh())
}

/// All three constants at once.
pub fn genus_constants(genus: Genus) -> Result<GenusConstants> {
    Ok(GenusConstants {
        c0: c0(genus),
        c1: c1(genus)?,
        c_half: c_half(genus)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{length, length_beta_diag, seam_length, CurveClass};

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn c0_frozen_values() {
        assert!((c0(g(2)) - 1.3169578969248168).abs() < 1e-12);
        assert!((c0(g(3)) - 1.5285709194809982).abs() < 1e-12);
        assert!((c0(g(5)) - 1.662885891058621).abs() < 1e-12);
    }

    #[test]
    fn c0_increases_toward_limit() {
        let limit = 2.0 * 1.0f64.asinh(); // 1.7627471740390861
        let mut prev = 0.0;
        for n in 2..=60 {
            let v = c0(g(n));
            assert!(v > prev && v < limit, "g = {n}");
            prev = v;
        }
        assert!((c0(g(100_000)) - limit).abs() < 1e-3);
    }

    #[test]
    fn c0_ties_alpha_and_gamma() {
        for n in [2, 3, 5, 9] {
            let c = c0(g(n));
            let a = length(g(n), c, 0.0, CurveClass::Alpha).unwrap();
            assert!((a - 2.0 * c).abs() < 1e-10, "g = {n}");
        }
    }

    #[test]
    fn c1_frozen_values() {
        assert!((c1(g(2)).unwrap() - 1.4657153519472905).abs() < 1e-10);
        assert!((c1(g(5)).unwrap() - 1.9649783751106262).abs() < 1e-10);
        // g = 3 collapses to sinh(c/2) = 1 exactly.
        assert!((c1(g(3)).unwrap() - 2.0 * 1.0f64.asinh()).abs() < 1e-10);
    }

    #[test]
    fn c1_defining_residual() {
        for n in [2, 3, 5, 8, 17] {
            let c = c1(g(n)).unwrap();
            let b = length_beta_diag(g(n), c).unwrap();
            assert!((b - 2.0 * c).abs() < 1e-10, "g = {n}");
        }
    }

    #[test]
    fn beta_exceeds_gamma_below_c1() {
        let gen = g(2);
        let c1v = c1(gen).unwrap();
        for i in 0..40 {
            let c = 0.05 + (c1v - 1e-6 - 0.05) * (i as f64) / 39.0;
            for j in 0..=10 {
                let t = c * (j as f64 / 10.0);
                let b = length(gen, c, t, CurveClass::Beta).unwrap();
                assert!(b > 2.0 * c, "c = {c}, t = {t}");
            }
        }
    }

    #[test]
    fn c_half_g3_is_exact() {
        // cos²(π/4) = 1/2 gives C = 3/2 on the nose.
        let ch = c_half(g(3)).unwrap();
        let cc = (0.5 * ch).cosh();
        assert!((cc - 1.5).abs() < 1e-12);
        assert!((ch - 1.9248473002384139).abs() < 1e-11);
        assert!(ch < 1.925);
    }

    #[test]
    fn c_half_frozen_values() {
        assert!((c_half(g(2)).unwrap() - 1.6002938265192639).abs() < 1e-10);
        assert!((c_half(g(5)).unwrap() - 2.1426523092091365).abs() < 1e-10);
    }

    #[test]
    fn c_half_monotone_and_bounded() {
        let cap = 2.0 * 1.75f64.acosh();
        let mut prev = 0.0;
        for n in 2..=50 {
            let v = c_half(g(n)).unwrap();
            assert!(v > prev, "g = {n}");
            assert!(v < cap, "g = {n}");
            prev = v;
        }
        for n in 5..=50 {
            assert!(c_half(g(n)).unwrap() < 2.318, "g = {n}");
        }
    }

    #[test]
    fn c_half_defining_residual() {
        for n in [2, 3, 5, 12] {
            let ch = c_half(g(n)).unwrap();
            let cc = (0.5 * ch).cosh();
            let k2 = g(n).angle_cosine().powi(2);
            let resid = (cc - 1.0).powi(2) * (2.0 * cc + 1.0) / (2.0 * cc - 1.0) - k2;
            assert!(resid.abs() < 1e-12, "g = {n}");
        }
    }

    #[test]
    fn constants_order() {
        // c₀ < c₁ < c_half across a genus sweep.
        for n in [2, 3, 5, 10, 30] {
            let k = genus_constants(g(n)).unwrap();
            assert!(k.c0 < k.c1 && k.c1 < k.c_half, "g = {n}: {k:?}");
        }
    }

    #[test]
    fn seam_at_c0_equals_c0() {
        for n in [2, 3, 5] {
            let c = c0(g(n));
            assert!((seam_length(g(n), c).unwrap() - c).abs() < 1e-12);
        }
    }
}
