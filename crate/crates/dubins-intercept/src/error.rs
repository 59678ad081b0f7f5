//! Error types shared across the crate.

use thiserror::Error;

use crate::geometry::SegmentKind;

/// Construction and kinematics errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("target speed {speed} must be strictly below the pursuer speed 1")]
    TargetTooFast { speed: f64 },
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("negative time {t}")]
    NegativeTime { t: f64 },
    #[error("segment magnitude {magnitude} must be nonnegative")]
    NegativeMagnitude { magnitude: f64 },
    #[error("arc of {radians} rad exceeds a full turn")]
    ArcTooLong { radians: f64 },
    #[error("turning radius {rho} must be positive")]
    InvalidRadius { rho: f64 },
    #[error("a Dubins path holds at most 2 segments, got {count}")]
    TooManySegments { count: usize },
    #[error("consecutive segments share kind {kind:?}")]
    RepeatedKind { kind: SegmentKind },
}

/// Root-finding errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("bisection endpoints do not bracket a sign change")]
    NoBracket,
    #[error("all polynomial coefficients are zero")]
    ZeroPolynomial,
    #[error("empty derivative chain")]
    EmptyChain,
}

/// Elongation-construction errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ElongationError {
    #[error("point ({x}, {y}) is outside R3 with x >= 0")]
    OutsideDomain { x: f64, y: f64 },
}

/// Solver-level errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("no valid intercept candidate found (internal consistency failure)")]
    NoCandidate,
    #[error("selected candidate violates {law}: t_m = {t_m}, reference = {reference}")]
    ConsistencyViolation {
        law: &'static str,
        t_m: f64,
        reference: f64,
    },
}

/// Oracle errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("no feasible intercept found up to horizon {t_max}")]
    HorizonExhausted { t_max: f64 },
}
