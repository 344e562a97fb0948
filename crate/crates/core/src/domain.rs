//! Fundamental domain membership, boundary geodesics, the half-plane
//! embedding and the mapping-class-group action with reduction.
//!
//! The pure mapping class group of the curve is the rank-2 free group on the
//! Dehn twists along α and γ. Its fundamental domain F is the ideal
//! quadrilateral |t| ≤ c, |t_α| ≤ c_α; adding the reflection r₀ and the
//! coordinate swap f quarters it to F₀ = {t ≥ 0, c ≤ c_α} ∩ F. The embedding
//! (c, t) ↦ t/c + i/c sends the twist lines L_j = {t = jc} to verticals and
//! makes the twist along γ a horizontal translation by 2.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{self, FnPoint, Genus, BOUNDARY_TOL, C_MAX};
use crate::spine;

/// A point of the upper half plane.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HalfPlanePoint {
    pub x: f64,
    pub y: f64,
}

/// Generators acting on the curve in (c, t) coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Letter {
    /// Dehn twist along α: t_α ↦ t_α + 2c_α in dual coordinates.
    DehnAlpha,
    DehnAlphaInv,
    /// Dehn twist along γ: (c, t) ↦ (c, t + 2c).
    DehnGamma,
    DehnGammaInv,
    /// Mirror reflection r₀: (c, t) ↦ (c, −t).
    Reflect,
    /// The dual-swap involution f: (c, t) ↦ (c_α, t_α).
    Swap,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::DehnAlpha,
        Letter::DehnAlphaInv,
        Letter::DehnGamma,
        Letter::DehnGammaInv,
        Letter::Reflect,
        Letter::Swap,
    ];

    /// One-character CLI spelling: A, a, G, g, R, F.
    pub fn code(self) -> char {
        match self {
            Letter::DehnAlpha => 'A',
            Letter::DehnAlphaInv => 'a',
            Letter::DehnGamma => 'G',
            Letter::DehnGammaInv => 'g',
            Letter::Reflect => 'R',
            Letter::Swap => 'F',
        }
    }

    pub fn from_code(ch: char) -> Option<Letter> {
        Letter::ALL.iter().copied().find(|l| l.code() == ch)
    }
}

/// A finite word over the generators, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", l.code())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parse a comma-separated word like "A,G,a,R".
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let mut letters = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            let tok = tok.trim();
            let mut chars = tok.chars();
            match (chars.next(), chars.next()) {
                (Some(ch), None) => match Letter::from_code(ch) {
                    Some(l) => letters.push(l),
                    None => {
                        return Err(Error::InvalidArgument(format!(
                            "unknown generator '{tok}' at position {i}; expected one of A a G g R F"
                        )))
                    }
                },
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "malformed generator '{tok}' at position {i}"
                    )))
                }
            }
        }
        Ok(Word(letters))
    }
}

/// Tags for the boundary geodesics of F plus the self-dual diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundaryGeodesic {
    LMinusOne,
    LZero,
    LOne,
    LAlphaMinusOne,
    /// Same point set as [`BoundaryGeodesic::LZero`].
    LAlphaZero,
    LAlphaOne,
    /// The self-dual locus c = c_α.
    LDiagonal,
}

impl BoundaryGeodesic {
    pub const ALL: [BoundaryGeodesic; 7] = [
        BoundaryGeodesic::LMinusOne,
        BoundaryGeodesic::LZero,
        BoundaryGeodesic::LOne,
        BoundaryGeodesic::LAlphaMinusOne,
        BoundaryGeodesic::LAlphaZero,
        BoundaryGeodesic::LAlphaOne,
        BoundaryGeodesic::LDiagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryGeodesic::LMinusOne => "L_-1",
            BoundaryGeodesic::LZero => "L_0",
            BoundaryGeodesic::LOne => "L_1",
            BoundaryGeodesic::LAlphaMinusOne => "L_alpha_-1",
            BoundaryGeodesic::LAlphaZero => "L_alpha_0",
            BoundaryGeodesic::LAlphaOne => "L_alpha_1",
            BoundaryGeodesic::LDiagonal => "L_-1_1",
        }
    }
}

/// Membership in the ideal quadrilateral F: |t| ≤ c and |t_α| ≤ c_α.
pub fn in_f(genus: Genus, c: f64, t: f64) -> Result<bool> {
    let p = FnPoint::new(genus, c, t)?;
    if t.abs() > c + BOUNDARY_TOL {
        return Ok(false);
    }
    let d = p.dual()?;
    Ok(d.t_alpha.abs() <= d.c_alpha + BOUNDARY_TOL)
}

/// Membership in the reduced domain F₀ = F ∩ {t ≥ 0, c ≤ c_α}.
pub fn in_f0(genus: Genus, c: f64, t: f64) -> Result<bool> {
    if t < -BOUNDARY_TOL {
        return Ok(false);
    }
    let p = FnPoint::new(genus, c, t)?;
    if t.abs() > c + BOUNDARY_TOL {
        return Ok(false);
    }
    let d = p.dual()?;
    Ok(c <= d.c_alpha + BOUNDARY_TOL && d.t_alpha.abs() <= d.c_alpha + BOUNDARY_TOL)
}

/// The half-plane chart (c, t) ↦ (t/c, 1/c).
pub fn minsky_embed(c: f64, t: f64) -> Result<HalfPlanePoint> {
    let valid = c.is_finite() && c > 0.0 && t.is_finite();
    if !valid {
        return Err(Error::InvalidArgument(format!(
            "embedding requires finite t and c > 0, got (c, t) = ({c}, {t})"
        )));
    }
    Ok(HalfPlanePoint {
        x: t / c,
        y: 1.0 / c,
    })
}

/// Sample one named geodesic over a cuff range and embed it.
///
/// The twist lines L_j are sampled directly and land on the verticals x = j.
/// The swap f carries L_j to L_alpha_j, so each L_alpha_j sample is f applied
/// to the L_j point at the same parameter value; the resulting coordinates
/// satisfy t_α/c_α = j on their own. Solving t_α/c_α = j in t at fixed c
/// would be ill-posed instead: the ratio is not monotone in t and the line
/// has a minimal cuff value below which no solution exists. The diagonal
/// c = c_α is parametrized through the α = γ slope function and is emitted on
/// its t ≥ 0 branch.
pub fn boundary_polyline(
    genus: Genus,
    tag: BoundaryGeodesic,
    c_range: (f64, f64),
    n: usize,
) -> Result<Vec<HalfPlanePoint>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    let (lo, hi) = c_range;
    let valid = lo.is_finite() && lo > 0.0 && hi >= lo;
    if !valid {
        return Err(Error::InvalidArgument(format!("bad c range [{lo}, {hi}]")));
    }
    let mut pts = Vec::with_capacity(n);
    for i in 0..n {
        let c = lo + (hi - lo) * (i as f64) / ((n - 1) as f64);
        let pt = sample_boundary(genus, tag, c).map_err(|e| e.at_sample(i))?;
        pts.push(pt);
    }
    Ok(pts)
}

fn sample_boundary(genus: Genus, tag: BoundaryGeodesic, c: f64) -> Result<HalfPlanePoint> {
    match tag {
        BoundaryGeodesic::LMinusOne => minsky_embed(c, -c),
        BoundaryGeodesic::LZero => minsky_embed(c, 0.0),
        BoundaryGeodesic::LOne => minsky_embed(c, c),
        BoundaryGeodesic::LAlphaMinusOne
        | BoundaryGeodesic::LAlphaZero
        | BoundaryGeodesic::LAlphaOne => {
            let j = match tag {
                BoundaryGeodesic::LAlphaMinusOne => -1.0,
                BoundaryGeodesic::LAlphaZero => 0.0,
                _ => 1.0,
            };
            let (cq, tq) = geometry::involution_f(genus, c, j * c)?;
            minsky_embed(cq, tq)
        }
        BoundaryGeodesic::LDiagonal => {
            let lo = crate::constants::c0(genus);
            let cq = c.max(lo);
            let u = spine::u0(genus, cq)?;
            minsky_embed(cq, u * cq)
        }
    }
}

/// Apply one generator at the coordinate level.
pub fn apply_letter(genus: Genus, letter: Letter, c: f64, t: f64) -> Result<(f64, f64)> {
    let p = FnPoint::new(genus, c, t)?;
    let (c2, t2) = match letter {
        Letter::DehnGamma => (c, t + 2.0 * c),
        Letter::DehnGammaInv => (c, t - 2.0 * c),
        Letter::Reflect => (c, -t),
        Letter::Swap => {
            let q = p.involution()?;
            (q.c(), q.t())
        }
        Letter::DehnAlpha | Letter::DehnAlphaInv => {
            let d = p.dual()?;
            let shift = if letter == Letter::DehnAlpha {
                2.0
            } else {
                -2.0
            };
            let ta = d.t_alpha + shift * d.c_alpha;
            from_dual(genus, d.c_alpha, ta)?
        }
    };
    if !(geometry::C_MIN..=C_MAX).contains(&c2) {
        return Err(Error::CuffOutOfWindow(c2));
    }
    Ok((c2, t2))
}

/// Invert the dual chart: recover (c, t) from (c_α, t_α).
///
/// Same pipeline as the swap involution read in the other direction: seam of
/// the dual cuff, then c from the t_α relation, then |t| from the c_α
/// relation, with sign(t) = −sign(t_α).
fn from_dual(genus: Genus, c_alpha: f64, t_alpha: f64) -> Result<(f64, f64)> {
    let k = genus.angle_cosine();
    let s_alpha = 2.0 * (k / (0.5 * c_alpha).sinh()).asinh();
    let c = 2.0 * ((0.5 * s_alpha).cosh() * (0.5 * t_alpha).cosh()).acosh();
    let t = if t_alpha == 0.0 {
        0.0
    } else {
        let s = 2.0 * (k / (0.5 * c).sinh()).asinh();
        let mag = 2.0 * geometry::acosh_clamped((0.5 * c_alpha).cosh() / (0.5 * s).cosh())?;
        if t_alpha > 0.0 {
            -mag
        } else {
            mag
        }
    };
    Ok((c, t))
}

/// Coordinate pair (c, t) of one trajectory step.
pub type CoordPair = (f64, f64);

/// Apply a word left to right, recording the trajectory (input included).
pub fn apply_word(
    genus: Genus,
    word: &Word,
    c: f64,
    t: f64,
) -> Result<(CoordPair, Vec<CoordPair>)> {
    FnPoint::new(genus, c, t)?;
    let mut cur = (c, t);
    let mut trajectory = vec![cur];
    for (i, letter) in word.0.iter().enumerate() {
        cur = apply_letter(genus, *letter, cur.0, cur.1).map_err(|e| e.at_sample(i))?;
        trajectory.push(cur);
    }
    Ok((cur, trajectory))
}

/// Result of a fundamental-domain reduction.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub c: f64,
    pub t: f64,
    pub word: Word,
}

/// Reduce a point into F₀, returning the canonical representative and the
/// word that realizes it.
///
/// Greedy descent: while the primal twist is outside |t| ≤ c, twist along γ
/// toward zero; else while the dual twist is outside |t_α| ≤ c_α, twist along
/// α; each dual move strictly shrinks c, so the loop terminates. The final
/// point is folded into the quarter domain by the reflection and the swap.
pub fn reduce_to_f0(genus: Genus, c: f64, t: f64, max_steps: usize) -> Result<Reduction> {
    if max_steps < 1 {
        return Err(Error::InvalidArgument(
            "max_steps must be at least 1".into(),
        ));
    }
    FnPoint::new(genus, c, t)?;
    let mut cur = (c, t);
    let mut word = Vec::new();
    let push = |letter: Letter, cur: &mut (f64, f64), word: &mut Vec<Letter>| -> Result<()> {
        *cur = apply_letter(genus, letter, cur.0, cur.1)?;
        word.push(letter);
        Ok(())
    };
    let mut steps = 0usize;
    loop {
        steps += 1;
        if steps > max_steps {
            return Err(Error::ReductionStalled {
                steps: max_steps,
                c: cur.0,
                t: cur.1,
            });
        }
        if cur.1.abs() > cur.0 + BOUNDARY_TOL {
            let letter = if cur.1 > 0.0 {
                Letter::DehnGammaInv
            } else {
                Letter::DehnGamma
            };
            push(letter, &mut cur, &mut word)?;
            continue;
        }
        let d = geometry::dual_coords(genus, cur.0, cur.1)?;
        if d.t_alpha.abs() > d.c_alpha + BOUNDARY_TOL {
            let letter = if d.t_alpha > 0.0 {
                Letter::DehnAlphaInv
            } else {
                Letter::DehnAlpha
            };
            push(letter, &mut cur, &mut word)?;
            continue;
        }
        break;
    }
    if cur.1 < -BOUNDARY_TOL {
        push(Letter::Reflect, &mut cur, &mut word)?;
    }
    let d = geometry::dual_coords(genus, cur.0, cur.1)?;
    if cur.0 > d.c_alpha + BOUNDARY_TOL {
        push(Letter::Swap, &mut cur, &mut word)?;
        if cur.1 < -BOUNDARY_TOL {
            push(Letter::Reflect, &mut cur, &mut word)?;
        }
    }
    Ok(Reduction {
        c: cur.0,
        t: cur.1,
        word: Word(word),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants;
    use crate::spine::triple_point;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn zero_twist_line_is_inside_f() {
        for c in [0.2, 1.0, 5.0] {
            assert!(in_f(g(2), c, 0.0).unwrap(), "c = {c}");
        }
    }

    #[test]
    fn large_twist_is_outside_f() {
        assert!(!in_f(g(2), 1.0, 2.5).unwrap());
    }

    #[test]
    fn full_twist_edge_is_inside_f() {
        assert!(in_f(g(2), 1.0, 1.0).unwrap());
    }

    #[test]
    fn f0_membership() {
        let gen = g(2);
        assert!(in_f0(gen, constants::c0(gen), 0.0).unwrap());
        // c > c_α: c = 2 at zero twist has c_α = s(2) < 1.
        assert!(!in_f0(gen, 2.0, 0.0).unwrap());
        assert!(!in_f0(gen, 1.0, -0.1).unwrap());
    }

    #[test]
    fn embedding_spot_values() {
        let p = minsky_embed(2.0, 1.0).unwrap();
        assert_eq!((p.x, p.y), (0.5, 0.5));
        let p = minsky_embed(1.0, 0.0).unwrap();
        assert_eq!((p.x, p.y), (0.0, 1.0));
        let p = minsky_embed(0.5, -0.5).unwrap();
        assert_eq!((p.x, p.y), (-1.0, 2.0));
        assert!(minsky_embed(0.0, 0.0).is_err());
    }

    #[test]
    fn twist_line_polylines_are_vertical() {
        let pts = boundary_polyline(g(2), BoundaryGeodesic::LOne, (0.5, 2.0), 4).unwrap();
        assert!(pts.iter().all(|p| p.x == 1.0));
        let pts = boundary_polyline(g(2), BoundaryGeodesic::LZero, (0.5, 2.0), 4).unwrap();
        assert!(pts.iter().all(|p| p.x == 0.0));
        let pts = boundary_polyline(g(2), BoundaryGeodesic::LMinusOne, (0.5, 2.0), 4).unwrap();
        assert!(pts.iter().all(|p| p.x == -1.0));
    }

    #[test]
    fn dual_one_line_satisfies_its_equation() {
        let gen = g(2);
        let pts = boundary_polyline(gen, BoundaryGeodesic::LAlphaOne, (0.8, 2.0), 16).unwrap();
        for p in &pts {
            assert!(p.x < 0.0, "sign rule: dual twist opposes t");
            let c = 1.0 / p.y;
            let t = p.x * c;
            let d = geometry::dual_coords(gen, c, t).unwrap();
            assert!((d.t_alpha / d.c_alpha - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn diagonal_polyline_is_self_dual() {
        let gen = g(2);
        let c0 = constants::c0(gen);
        let pts = boundary_polyline(gen, BoundaryGeodesic::LDiagonal, (c0, c0 + 1.5), 8).unwrap();
        for p in &pts {
            let c = 1.0 / p.y;
            let t = p.x * c;
            let d = geometry::dual_coords(gen, c, t).unwrap();
            assert!((d.c_alpha - c).abs() < 1e-9);
        }
    }

    #[test]
    fn twist_actions() {
        let gen = g(2);
        let (c, t) = apply_letter(gen, Letter::DehnGamma, 1.0, 0.3).unwrap();
        assert_eq!((c, t), (1.0, 2.3));
        let (c, t) = apply_letter(gen, Letter::Reflect, 1.0, 0.3).unwrap();
        assert_eq!((c, t), (1.0, -0.3));
    }

    #[test]
    fn alpha_twist_round_trip() {
        let gen = g(2);
        let (c1, t1) = apply_letter(gen, Letter::DehnAlpha, 1.2, 0.1).unwrap();
        let (c2, t2) = apply_letter(gen, Letter::DehnAlphaInv, c1, t1).unwrap();
        assert!((c2 - 1.2).abs() < 1e-9);
        assert!((t2 - 0.1).abs() < 1e-9);
    }

    #[test]
    fn alpha_twist_preserves_alpha_length() {
        let gen = g(3);
        let d0 = geometry::dual_coords(gen, 1.4, 0.6).unwrap();
        let (c1, t1) = apply_letter(gen, Letter::DehnAlpha, 1.4, 0.6).unwrap();
        let d1 = geometry::dual_coords(gen, c1, t1).unwrap();
        assert!((d0.c_alpha - d1.c_alpha).abs() < 1e-9);
    }

    #[test]
    fn alpha_twist_is_swap_conjugate_of_gamma_twist() {
        let gen = g(2);
        for (c, t) in [(1.1, 0.2), (1.6, -0.7), (0.9, 0.0)] {
            let direct = apply_letter(gen, Letter::DehnAlpha, c, t).unwrap();
            let (c1, t1) = apply_letter(gen, Letter::Swap, c, t).unwrap();
            let (c2, t2) = apply_letter(gen, Letter::DehnGamma, c1, t1).unwrap();
            let via = apply_letter(gen, Letter::Swap, c2, t2).unwrap();
            assert!((direct.0 - via.0).abs() < 1e-9, "({c}, {t})");
            assert!((direct.1 - via.1).abs() < 1e-9, "({c}, {t})");
        }
    }

    #[test]
    fn edge_pairing_on_twist_lines() {
        // The γ twist carries t = −c to t = +c exactly.
        let (c, t) = apply_letter(g(2), Letter::DehnGamma, 1.3, -1.3).unwrap();
        assert_eq!((c, t), (1.3, 1.3));
    }

    #[test]
    fn word_parse_and_round_trip() {
        let w: Word = "A,G,a,R,F,g".parse().unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.to_string(), "A,G,a,R,F,g");
        assert!(Word::from_str("A,X").is_err());
        assert!(Word::from_str("").unwrap().is_empty());
    }

    #[test]
    fn empty_word_is_identity() {
        let (end, traj) = apply_word(g(2), &Word::default(), 1.0, 0.3).unwrap();
        assert_eq!(end, (1.0, 0.3));
        assert_eq!(traj.len(), 1);
    }

    #[test]
    fn inverse_pair_restores_input() {
        let w: Word = "G,g".parse().unwrap();
        let (end, traj) = apply_word(g(2), &w, 1.0, 0.3).unwrap();
        assert_eq!(traj.len(), 3);
        assert!((end.0 - 1.0).abs() < 1e-12);
        assert!((end.1 - 0.3).abs() < 1e-12);
    }

    #[test]
    fn reduction_of_interior_point_is_identity() {
        let gen = g(2);
        let c0 = constants::c0(gen);
        let r = reduce_to_f0(gen, c0 - 0.1, 0.05, 100_000).unwrap();
        assert!(r.word.is_empty());
        assert_eq!((r.c, r.t), (c0 - 0.1, 0.05));
    }

    #[test]
    fn reduction_recovers_twisted_triple_point() {
        let gen = g(2);
        let tp = triple_point(gen).unwrap();
        let (c, t) = (tp.c_m, tp.c_m * tp.u_m);
        let (moved, _) = apply_word(gen, &"G".parse().unwrap(), c, t).unwrap();
        let r = reduce_to_f0(gen, moved.0, moved.1, 100_000).unwrap();
        assert!((r.c - c).abs() < 1e-9);
        assert!((r.t - t).abs() < 1e-9);
        assert!(!r.word.is_empty());
    }

    #[test]
    fn reduction_reflects_negative_twist() {
        let gen = g(2);
        let (c, t) = (constants::c0(gen) - 0.1, 0.05);
        let r = reduce_to_f0(gen, c, -t, 100_000).unwrap();
        assert!(r.word.0.contains(&Letter::Reflect));
        assert!((r.c - c).abs() < 1e-12);
        assert!((r.t - t).abs() < 1e-12);
    }

    #[test]
    fn reduction_applies_swap_past_diagonal() {
        let gen = g(2);
        // Zero twist with c above c₀ has c > c_α.
        let r = reduce_to_f0(gen, 2.0, 0.0, 100_000).unwrap();
        assert!(r.word.0.contains(&Letter::Swap));
        assert!(in_f0(gen, r.c, r.t).unwrap());
    }

    #[test]
    fn reduction_is_idempotent() {
        let gen = g(3);
        let (moved, _) = apply_word(gen, &"A,G,a".parse().unwrap(), 1.5, 0.4).unwrap();
        let r = reduce_to_f0(gen, moved.0, moved.1, 100_000).unwrap();
        let r2 = reduce_to_f0(gen, r.c, r.t, 100_000).unwrap();
        assert!(r2.word.is_empty());
        assert_eq!((r2.c, r2.t), (r.c, r.t));
    }

    #[test]
    fn reduction_word_matches_its_action() {
        let gen = g(2);
        let tp = triple_point(gen).unwrap();
        let (c, t) = (tp.c_m, tp.c_m * tp.u_m);
        let (moved, _) = apply_word(gen, &"A,G".parse().unwrap(), c, t).unwrap();
        let r = reduce_to_f0(gen, moved.0, moved.1, 100_000).unwrap();
        let (end, _) = apply_word(gen, &r.word, moved.0, moved.1).unwrap();
        assert!((end.0 - r.c).abs() < 1e-12);
        assert!((end.1 - r.t).abs() < 1e-12);
        assert!((r.c - c).abs() < 1e-8);
        assert!((r.t - t).abs() < 1e-8);
    }

    #[test]
    fn swap_preserves_length_pair() {
        // f exchanges the α and γ families, so {ℓ_α, ℓ_γ} is preserved as a set.
        let gen = g(2);
        let (c, t) = (1.3, 0.5);
        let la = geometry::length(gen, c, t, geometry::CurveClass::Alpha).unwrap();
        let lg = 2.0 * c;
        let (cq, tq) = apply_letter(gen, Letter::Swap, c, t).unwrap();
        let la2 = geometry::length(gen, cq, tq, geometry::CurveClass::Alpha).unwrap();
        let lg2 = 2.0 * cq;
        assert!((la - lg2).abs() < 1e-9);
        assert!((lg - la2).abs() < 1e-9);
    }

    #[test]
    fn l1_stays_clear_of_dual_edges() {
        // Along t = c the dual twist never reaches the dual cuff.
        let gen = g(2);
        for i in 0..60 {
            let c = 0.05 + (10.0 - 0.05) * (i as f64) / 59.0;
            let d = geometry::dual_coords(gen, c, c).unwrap();
            assert!(d.c_alpha - d.t_alpha.abs() > 0.0, "c = {c}");
        }
    }
}
