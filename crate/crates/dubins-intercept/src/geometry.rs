//! Planar types, Dubins segment algebra, and exact forward rollout of the
//! unit-speed bounded-curvature kinematics.
//!
//! Everything here works in the canonical frame: pursuer speed 1, start
//! configuration `(0, 0, π/2)` unless a different start is supplied
//! explicitly. Angles are radians normalized to `[0, 2π)`.

use std::f64::consts::{PI, TAU};

use crate::error::GeometryError;

/// Absolute tolerance for angle equality tests.
pub const ANGLE_TOL: f64 = 1e-12;

/// Normalizes an angle to the half-open interval `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut a = theta % TAU;
    if a < 0.0 {
        a += TAU;
    }
    // `-1e-300 % TAU` rounds to TAU itself; fold it back.
    if a >= TAU {
        a -= TAU;
    }
    a
}

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Reflection across the y axis.
    pub fn mirror_x(self) -> Point {
        Point::new(-self.x, self.y)
    }
}

/// A planar pose: position plus heading in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Configuration {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Configuration {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Self {
            x,
            y,
            theta: normalize_angle(theta),
        }
    }

    /// The canonical start pose `(0, 0, π/2)`.
    pub fn canonical() -> Self {
        Self::new(0.0, 0.0, PI / 2.0)
    }

    pub fn position(self) -> Point {
        Point::new(self.x, self.y)
    }
}

/// Constant-velocity target motion; speed is in units of the pursuer speed
/// and must be strictly below 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetMotion {
    p0: Point,
    v: Point,
}

impl TargetMotion {
    /// Builds a target motion, rejecting speeds `‖v‖ ≥ 1`.
    pub fn new(p0: Point, v: Point) -> Result<Self, GeometryError> {
        let speed = v.norm();
        if !(speed < 1.0) {
            return Err(GeometryError::TargetTooFast { speed });
        }
        if !p0.x.is_finite() || !p0.y.is_finite() || !v.x.is_finite() || !v.y.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self { p0, v })
    }

    pub fn p0(&self) -> Point {
        self.p0
    }

    pub fn velocity(&self) -> Point {
        self.v
    }

    pub fn speed(&self) -> f64 {
        self.v.norm()
    }

    /// The same motion reflected across the y axis.
    pub fn mirror_x(&self) -> Self {
        Self {
            p0: self.p0.mirror_x(),
            v: self.v.mirror_x(),
        }
    }

    /// Target position at time `t ≥ 0`.
    pub fn position_at(&self, t: f64) -> Result<Point, GeometryError> {
        if t < 0.0 {
            return Err(GeometryError::NegativeTime { t });
        }
        Ok(self.position_at_unchecked(t))
    }

    /// Same as [`position_at`](Self::position_at) without the sign check;
    /// used internally where `t ≥ 0` is already established.
    pub fn position_at_unchecked(&self, t: f64) -> Point {
        Point::new(self.p0.x + self.v.x * t, self.p0.y + self.v.y * t)
    }
}

/// Segment kind: circular arcs by turn direction, or a straight line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentKind {
    LeftArc,
    RightArc,
    Line,
}

impl SegmentKind {
    /// Control input on this segment: +1 left, -1 right, 0 straight.
    pub fn control(self) -> f64 {
        match self {
            SegmentKind::LeftArc => 1.0,
            SegmentKind::RightArc => -1.0,
            SegmentKind::Line => 0.0,
        }
    }

    pub fn mirror_x(self) -> Self {
        match self {
            SegmentKind::LeftArc => SegmentKind::RightArc,
            SegmentKind::RightArc => SegmentKind::LeftArc,
            SegmentKind::Line => SegmentKind::Line,
        }
    }

    pub fn letter(self) -> char {
        match self {
            SegmentKind::LeftArc => 'L',
            SegmentKind::RightArc => 'R',
            SegmentKind::Line => 'S',
        }
    }
}

/// One path segment: radians for arcs, length for lines, both nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub magnitude: f64,
}

impl Segment {
    pub fn new(kind: SegmentKind, magnitude: f64) -> Result<Self, GeometryError> {
        if !(magnitude >= 0.0) {
            return Err(GeometryError::NegativeMagnitude { magnitude });
        }
        if kind != SegmentKind::Line && magnitude > TAU + ANGLE_TOL {
            return Err(GeometryError::ArcTooLong { radians: magnitude });
        }
        Ok(Self {
            kind,
            magnitude: if kind == SegmentKind::Line {
                magnitude
            } else {
                magnitude.min(TAU)
            },
        })
    }

    /// Arc-length contribution for turning radius `rho`.
    pub fn length(self, rho: f64) -> f64 {
        match self.kind {
            SegmentKind::Line => self.magnitude,
            _ => rho * self.magnitude,
        }
    }
}

/// A Dubins path of at most two segments from a start configuration.
///
/// Zero-magnitude segments are dropped at construction, and consecutive
/// segments of the same kind are rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct DubinsPath {
    pub start: Configuration,
    pub rho: f64,
    segments: Vec<Segment>,
}

/// Magnitudes at or below this are treated as degenerate and dropped.
const DEGENERATE_MAG: f64 = 1e-12;

impl DubinsPath {
    pub fn new(
        start: Configuration,
        rho: f64,
        segments: Vec<Segment>,
    ) -> Result<Self, GeometryError> {
        if !(rho > 0.0) {
            return Err(GeometryError::InvalidRadius { rho });
        }
        let kept: Vec<Segment> = segments
            .into_iter()
            .filter(|s| s.magnitude > DEGENERATE_MAG)
            .collect();
        if kept.len() > 2 {
            return Err(GeometryError::TooManySegments { count: kept.len() });
        }
        if kept.len() == 2 && kept[0].kind == kept[1].kind {
            return Err(GeometryError::RepeatedKind { kind: kept[0].kind });
        }
        Ok(Self {
            start,
            rho,
            segments: kept,
        })
    }

    /// Empty path at the canonical start.
    pub fn null(rho: f64) -> Self {
        Self {
            start: Configuration::canonical(),
            rho,
            segments: Vec::new(),
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn total_length(&self) -> f64 {
        self.segments.iter().map(|s| s.length(self.rho)).sum()
    }

    /// The path started from the mirrored pose with L and R arcs swapped.
    pub fn mirror_x(&self) -> Self {
        Self {
            start: Configuration::new(-self.start.x, self.start.y, PI - self.start.theta),
            rho: self.rho,
            segments: self
                .segments
                .iter()
                .map(|s| Segment {
                    kind: s.kind.mirror_x(),
                    magnitude: s.magnitude,
                })
                .collect(),
        }
    }
}

/// Advances a configuration along one segment by arc-length `s ≥ 0`.
pub fn step_along(config: Configuration, kind: SegmentKind, s: f64, rho: f64) -> Configuration {
    let Configuration { x, y, theta } = config;
    match kind {
        SegmentKind::Line => Configuration::new(x + s * theta.cos(), y + s * theta.sin(), theta),
        SegmentKind::LeftArc => {
            let phi = s / rho;
            let new = theta + phi;
            Configuration::new(
                x + rho * (new.sin() - theta.sin()),
                y + rho * (theta.cos() - new.cos()),
                new,
            )
        }
        SegmentKind::RightArc => {
            let phi = s / rho;
            let new = theta - phi;
            Configuration::new(
                x + rho * (theta.sin() - new.sin()),
                y + rho * (new.cos() - theta.cos()),
                new,
            )
        }
    }
}

/// Exact terminal configuration of a path by closed-form composition.
pub fn terminal(path: &DubinsPath) -> Configuration {
    let mut c = path.start;
    for seg in path.segments() {
        c = step_along(c, seg.kind, seg.length(path.rho), path.rho);
    }
    c
}

/// One sample of a rolled-out trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    /// Time since the start of the path (unit speed: equals arc length).
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    /// Control input in `{-1, 0, 1}`.
    pub u: f64,
}

/// Rolls the path out, returning the exact terminal configuration plus a
/// uniformly time-sampled trajectory (step `dt`, endpoint always included).
pub fn rollout(path: &DubinsPath, dt: f64) -> (Configuration, Vec<TrajectorySample>) {
    let total = path.total_length();
    let dt = if dt > 0.0 { dt } else { total.max(1.0) };
    let mut samples = Vec::new();
    let n = (total / dt).ceil() as usize;
    for i in 0..=n {
        let t = (i as f64 * dt).min(total);
        let (config, u) = at_length(path, t);
        samples.push(TrajectorySample {
            t,
            x: config.x,
            y: config.y,
            theta: config.theta,
            u,
        });
        if t >= total {
            break;
        }
    }
    if samples.last().map(|s| s.t < total).unwrap_or(true) {
        let (config, u) = at_length(path, total);
        samples.push(TrajectorySample {
            t: total,
            x: config.x,
            y: config.y,
            theta: config.theta,
            u,
        });
    }
    (terminal(path), samples)
}

/// Configuration and control at arc length `s` into the path.
pub fn at_length(path: &DubinsPath, s: f64) -> (Configuration, f64) {
    let mut remaining = s.max(0.0);
    let mut config = path.start;
    let mut u = 0.0;
    for seg in path.segments() {
        let len = seg.length(path.rho);
        u = seg.kind.control();
        if remaining <= len {
            return (step_along(config, seg.kind, remaining, path.rho), u);
        }
        config = step_along(config, seg.kind, len, path.rho);
        remaining -= len;
    }
    (config, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn canonical_path(segs: &[(SegmentKind, f64)], rho: f64) -> DubinsPath {
        DubinsPath::new(
            Configuration::canonical(),
            rho,
            segs.iter()
                .map(|&(k, m)| Segment::new(k, m).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn straight_rollout() {
        let p = canonical_path(&[(SegmentKind::Line, 5.0)], 1.0);
        let end = terminal(&p);
        assert_abs_diff_eq!(end.x, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(end.y, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(end.theta, PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn half_circle_left() {
        let p = canonical_path(&[(SegmentKind::LeftArc, PI)], 1.0);
        let end = terminal(&p);
        assert_abs_diff_eq!(end.x, -2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(end.y, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(end.theta, 3.0 * PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn lr_terminal_matches_closed_form() {
        // L_u R_v from the canonical start ends at
        // (-rho + 2 rho cos u + rho cos(u+pi-v), 2 rho sin u + rho sin(u+pi-v)).
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let u = next() * TAU;
            let v = next() * TAU;
            let rho = 0.25 + 3.0 * next();
            let p = canonical_path(&[(SegmentKind::LeftArc, u), (SegmentKind::RightArc, v)], rho);
            let end = terminal(&p);
            let ex = -rho + 2.0 * rho * u.cos() + rho * (u + PI - v).cos();
            let ey = 2.0 * rho * u.sin() + rho * (u + PI - v).sin();
            assert_abs_diff_eq!(end.x, ex, epsilon = 1e-9 * rho);
            assert_abs_diff_eq!(end.y, ey, epsilon = 1e-9 * rho);
        }
    }

    #[test]
    fn sampled_endpoint_matches_terminal() {
        let p = canonical_path(
            &[(SegmentKind::RightArc, 2.1545869564), (SegmentKind::Line, 16.2945484548)],
            1.0,
        );
        let (end, samples) = rollout(&p, 0.01);
        let last = samples.last().unwrap();
        assert!(end.position().distance(Point::new(last.x, last.y)) <= 1e-9);
        assert_abs_diff_eq!(last.t, p.total_length(), epsilon = 1e-12);
        // curvature bound: |u| <= 1 everywhere
        assert!(samples.iter().all(|s| s.u.abs() <= 1.0));
    }

    #[test]
    fn rollout_composes() {
        let p = canonical_path(
            &[(SegmentKind::LeftArc, 1.3), (SegmentKind::Line, 2.5)],
            0.7,
        );
        let end = terminal(&p);
        let mid = step_along(Configuration::canonical(), SegmentKind::LeftArc, 0.7 * 1.3, 0.7);
        let end2 = step_along(mid, SegmentKind::Line, 2.5, 0.7);
        assert_abs_diff_eq!(end.x, end2.x, epsilon = 1e-12);
        assert_abs_diff_eq!(end.y, end2.y, epsilon = 1e-12);
    }

    #[test]
    fn mirror_reflects_terminal() {
        let p = canonical_path(
            &[(SegmentKind::RightArc, 0.9), (SegmentKind::Line, 3.0)],
            1.0,
        );
        let end = terminal(&p);
        let end_m = terminal(&p.mirror_x());
        assert_abs_diff_eq!(end_m.x, -end.x, epsilon = 1e-12);
        assert_abs_diff_eq!(end_m.y, end.y, epsilon = 1e-12);
    }

    #[test]
    fn target_position_examples() {
        let m = TargetMotion::new(Point::new(5.0, 2.0), Point::new(0.55, -0.55)).unwrap();
        let p = m.position_at(18.45).unwrap();
        assert_abs_diff_eq!(p.x, 15.1475, epsilon = 1e-12);
        assert_abs_diff_eq!(p.y, -8.1475, epsilon = 1e-12);

        let m = TargetMotion::new(Point::new(1.2, 0.0), Point::new(-0.1, -0.1)).unwrap();
        let p = m.position_at(5.43).unwrap();
        assert_abs_diff_eq!(p.x, 0.657, epsilon = 1e-12);
        assert_abs_diff_eq!(p.y, -0.543, epsilon = 1e-12);

        assert_eq!(m.position_at(0.0).unwrap(), m.p0());
        assert!(m.position_at(-1.0).is_err());
    }

    #[test]
    fn target_speed_invariant() {
        assert!(TargetMotion::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0)).is_err());
        assert!(TargetMotion::new(Point::new(0.0, 0.0), Point::new(0.8, 0.6)).is_err());
        assert!(TargetMotion::new(Point::new(0.0, 0.0), Point::new(0.99, 0.0)).is_ok());
    }

    #[test]
    fn degenerate_segments_dropped() {
        let p = canonical_path(
            &[(SegmentKind::LeftArc, 0.0), (SegmentKind::Line, 2.0)],
            1.0,
        );
        assert_eq!(p.segments().len(), 1);
        assert_eq!(p.segments()[0].kind, SegmentKind::Line);
    }

    #[test]
    fn repeated_kind_rejected() {
        let segs = vec![
            Segment::new(SegmentKind::Line, 1.0).unwrap(),
            Segment::new(SegmentKind::Line, 2.0).unwrap(),
        ];
        assert!(DubinsPath::new(Configuration::canonical(), 1.0, segs).is_err());
    }

    #[test]
    fn angle_normalization() {
        assert_abs_diff_eq!(normalize_angle(-PI), PI, epsilon = 1e-15);
        assert_abs_diff_eq!(normalize_angle(3.0 * TAU + 0.25), 0.25, epsilon = 1e-12);
        assert_eq!(normalize_angle(0.0), 0.0);
        assert!(normalize_angle(-1e-300) < TAU);
    }
}
