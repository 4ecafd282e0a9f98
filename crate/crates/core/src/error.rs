//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by algebra, quadrature and special-function evaluation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Operands live in Cayley-Dickson algebras of different levels.
    #[error("level mismatch: left operand has level {left}, right has level {right}")]
    LevelMismatch { left: u32, right: u32 },

    /// Inverse of zero (or of a number numerically indistinguishable from zero).
    #[error("singular input: cannot invert a zero Cayley-Dickson number")]
    SingularInput,

    /// The conj/|z|^2 candidate inverse failed its post-check `z * z^-1 = 1`.
    /// Only reachable at levels >= 4 where the algebra has zero divisors.
    #[error("inverse post-check failed at level {level}: |z*inv - 1| = {deviation:.3e}")]
    InverseCheckFailed { level: u32, deviation: f64 },

    /// An operation required a pure-imaginary argument.
    #[error("argument must be pure imaginary (got real part {re:.3e})")]
    NotPureImaginary { re: f64 },

    /// A unit axis was requested from a vector that is zero or not pure.
    #[error("cannot normalize into a unit pure-imaginary axis: {reason}")]
    InvalidAxis { reason: String },

    /// Principal logarithm/power evaluated on or too near the branch cut.
    #[error("branch cut: argument within {distance:.3e} of the negative real axis")]
    BranchCut { distance: f64 },

    /// z^w requested for arguments that do not share a slice plane.
    #[error("non-coplanar arguments: pure parts are not parallel (angle defect {defect:.3e})")]
    NotCoplanar { defect: f64 },

    /// Evaluation at (or too near) a pole.
    #[error("pole: {what} at distance {distance:.3e} from {location}")]
    Pole {
        what: String,
        location: String,
        distance: f64,
    },

    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature failed to reach the requested tolerance; carries the best estimate.
    #[error("quadrature did not converge: error estimate {estimate:.3e} after {refinements} refinements")]
    AccuracyFailure {
        estimate: f64,
        refinements: usize,
        /// Best value found, as raw coordinates.
        best: Vec<f64>,
    },

    /// Integrand produced a NaN at some abscissa.
    #[error("integrand evaluated to NaN at t = {at}")]
    EvaluationNaN { at: f64 },

    /// A contour was declared or detected outside a single slice plane.
    #[error("contour not confined to one slice plane: {0}")]
    ContourNotPlanar(String),

    /// Invalid contour or configuration parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Precondition on algebraic structure (embeddability, norm guard) failed.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Hankel Gamma representation degenerates at integer arguments.
    #[error("representation pole: sin(pi z) vanishes at integer z = {0}")]
    RepresentationPole(i64),

    /// Asymptotic series unusable: first correction term does not decrease.
    #[error("|z| = {magnitude:.3e} too small for the asymptotic series (terms do not decrease)")]
    MagnitudeTooSmall { magnitude: f64 },

    /// Argument outside the validity sector of an asymptotic expansion.
    #[error("sector violation: |Arg z| = {arg:.6} exceeds pi - {margin:.3e}")]
    SectorViolation { arg: f64, margin: f64 },

    /// Text in the CD-number grammar failed to parse.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
