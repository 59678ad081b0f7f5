//! Minimum-time intercept paths for a bounded-curvature (Dubins) vehicle
//! against a constant-velocity target, and equivalently shortest Dubins
//! paths to a fixed point in a constant drift field.
//!
//! The solver reduces each candidate path family to the zeros of a smooth
//! fixed-point function of one variable, enumerates all of them from a
//! quartic-anchored critical-point scaffold, validates every root by exact
//! rollout, and returns the minimum-time survivor:
//!
//! - [`geometry`]: planar types, segment algebra, exact rollout.
//! - [`rdp`]: closed-form shortest path to a point with free heading, and
//!   the region partition that governs reachability.
//! - [`elongation`]: the two tangent-circle path lengths bounding the gap of
//!   unreachable durations in the near zone.
//! - [`rootfinding`]: bisection, complete zero enumeration on a critical
//!   scaffold, quartic/cubic closed forms, derivative-chain driver.
//! - [`mtip`]: the intercept solver and the drift-field entry point.
//! - [`oracle`]: brute-force references used by the test suites.
//! - [`batch`]: data-parallel solving over instance sets.
//!
//! ```
//! use dubins_intercept::{solve_mtip, Point, TargetMotion};
//!
//! let m = TargetMotion::new(Point::new(5.0, 2.0), Point::new(0.55, -0.55)).unwrap();
//! let sol = solve_mtip(&m, 1.0).unwrap();
//! assert!((sol.t_m - 18.449).abs() < 1e-3);
//! ```

pub mod batch;
pub mod elongation;
pub mod error;
pub mod geometry;
pub mod mtip;
pub mod oracle;
pub mod rdp;
pub mod rootfinding;

pub use elongation::{elongation, elongation_any, feasible_length, ElongationPair};
pub use error::{ElongationError, GeometryError, OracleError, RootError, SolveError};
pub use geometry::{
    rollout, terminal, Configuration, DubinsPath, Point, Segment, SegmentKind, TargetMotion,
    TrajectorySample,
};
pub use mtip::{
    solve_drift, solve_mtip, solve_mtip_from, Candidate, DriftSolution, ElongationBranch,
    InterceptSolution,
};
pub use rdp::{classify_region, rdp_length, solve_rdp, PathFamily, RdpSolution, Region, RegionTag};
