//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by geometry evaluations, solvers and domain reductions.
#[derive(Debug, Error)]
pub enum Error {
    /// Genus below the supported minimum of 2.
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u64),

    /// Cuff parameter outside the supported numeric window.
    #[error("cuff parameter c = {0} outside supported window [{min}, {max}]", min = crate::geometry::C_MIN, max = crate::geometry::C_MAX)]
    CuffOutOfWindow(f64),

    /// Twist outside the strip where the β/δ formulas are stated.
    #[error("twist t = {t} outside [0, c] = [0, {c}] required for this curve class")]
    TwistOutOfStrip { t: f64, c: f64 },

    /// The dual-coordinate pipeline produced an arccosh argument below 1.
    #[error("dual coordinates inconsistent: arccosh argument {0} < 1 beyond tolerance")]
    DualInconsistency(f64),

    /// Root finder called without a sign change on the bracket.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {flo:e}, f(hi) = {fhi:e}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        flo: f64,
        fhi: f64,
    },

    /// Root finder exhausted its iteration budget.
    #[error("root finder exceeded {0} iterations")]
    MaxIterations(usize),

    /// Bracket expansion ran past the numeric window without a sign change.
    #[error("bracket expansion exhausted the numeric window at {0}")]
    BracketExhausted(f64),

    /// Query outside the domain of an implicit arc.
    #[error("c = {c} below the arc domain start {lo} for {what}")]
    BelowArcDomain { what: &'static str, c: f64, lo: f64 },

    /// Implicit solve found no root where one is guaranteed.
    #[error("no root for {what} at c = {c}: {detail}")]
    NoRoot {
        what: &'static str,
        c: f64,
        detail: String,
    },

    /// Operation requires a point of the reduced fundamental domain.
    #[error("point (c, t) = ({c}, {t}) is not in the reduced fundamental domain")]
    OutsideReducedDomain { c: f64, t: f64 },

    /// Fundamental-domain reduction failed to terminate.
    #[error("reduction did not terminate within {steps} steps; last state (c, t) = ({c}, {t})")]
    ReductionStalled { steps: usize, c: f64, t: f64 },

    /// Invalid argument to a sampling or configuration routine.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Failure attributed to one sample of a polyline or arc trace.
    #[error("sample {index} failed")]
    Sample {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// Claim id not present in the verification registry.
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn at_sample(self, index: usize) -> Error {
        Error::Sample {
            index,
            source: Box::new(self),
        }
    }
}
