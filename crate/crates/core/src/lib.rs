//! Numerical toolkit for the Teichmüller curve of genus-g hyperbolic surfaces
//! with an order-(g+1) rotation symmetry.
//!
//! The curve is parametrized by Fenchel-Nielsen coordinates (c, t): half the
//! cuff length of the symmetric pants decomposition and the twist along it.
//! This crate evaluates the closed-form geodesic lengths of the four systole
//! candidate families, changes to the dual coordinate system, solves the
//! implicit systole-tie arcs and their three-systole junction, reduces
//! arbitrary points into a fundamental domain of the mapping-class-group
//! action, and certifies the quantitative facts behind all of it as an
//! executable claim battery.

pub mod constants;
pub mod domain;
pub mod error;
pub mod geometry;
pub mod solver;
pub mod spine;
pub mod verify;

pub use constants::{c0, c1, c_half, genus_constants, GenusConstants};
pub use domain::{
    apply_letter, apply_word, boundary_polyline, in_f, in_f0, minsky_embed, reduce_to_f0,
    BoundaryGeodesic, HalfPlanePoint, Letter, Reduction, Word,
};
pub use error::{Error, Result};
pub use geometry::{
    dual_coords, involution_f, length, length_beta_diag, seam_length, CurveClass, DualCoords,
    FnPoint, Genus, LengthReport,
};
pub use solver::{find_root, SolverConfig};
pub use spine::{
    in_spine, systole_report, trace_arc, triple_point, u0, u1, ArcKind, SlopePoint, SpineArc,
    SystoleReport, TriplePoint,
};
pub use verify::{claim_ids, run_all, run_claim, ClaimResult, VerifyConfig};
