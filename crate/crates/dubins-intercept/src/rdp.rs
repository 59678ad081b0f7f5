//! Relaxed Dubins problem: shortest path from the canonical start to a point
//! with free terminal heading, plus the R1/R2/R3 region partition.
//!
//! Candidates are built by circle tangency: RS/LS from the point-to-circle
//! tangent, LR/RL from intersecting the locus of second-circle centers
//! (radius `2ρ` about the first turning center) with the radius-`ρ` circle
//! about the terminal point, both sign branches included. The minimum over
//! validated candidates is the solution; `F[0,0] = 0` with the empty path.

use std::f64::consts::PI;

use crate::geometry::{
    normalize_angle, terminal, Configuration, DubinsPath, Point, Segment, SegmentKind,
};

/// Region tag of the plane partition induced by the turning disks and the
/// radius-`3ρ` disks about their centers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionTag {
    R1,
    R2,
    R3,
}

/// Half-plane side of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    RightHalf,
    LeftHalf,
    Axis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub tag: RegionTag,
    pub side: Side,
}

/// Path family labels for solutions and candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathFamily {
    Rs,
    Ls,
    Lr,
    Rl,
    R,
    L,
    S,
    Null,
}

impl PathFamily {
    pub fn mirror_x(self) -> Self {
        match self {
            PathFamily::Rs => PathFamily::Ls,
            PathFamily::Ls => PathFamily::Rs,
            PathFamily::Lr => PathFamily::Rl,
            PathFamily::Rl => PathFamily::Lr,
            PathFamily::R => PathFamily::L,
            PathFamily::L => PathFamily::R,
            other => other,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PathFamily::Rs => "RS",
            PathFamily::Ls => "LS",
            PathFamily::Lr => "LR",
            PathFamily::Rl => "RL",
            PathFamily::R => "R",
            PathFamily::L => "L",
            PathFamily::S => "S",
            PathFamily::Null => "Null",
        }
    }

    /// Family implied by the (possibly degenerate) segment list.
    pub fn of_segments(segments: &[Segment]) -> Self {
        match segments {
            [] => PathFamily::Null,
            [a] => match a.kind {
                SegmentKind::LeftArc => PathFamily::L,
                SegmentKind::RightArc => PathFamily::R,
                SegmentKind::Line => PathFamily::S,
            },
            [a, b] => match (a.kind, b.kind) {
                (SegmentKind::RightArc, SegmentKind::Line) => PathFamily::Rs,
                (SegmentKind::LeftArc, SegmentKind::Line) => PathFamily::Ls,
                (SegmentKind::LeftArc, SegmentKind::RightArc) => PathFamily::Lr,
                (SegmentKind::RightArc, SegmentKind::LeftArc) => PathFamily::Rl,
                _ => PathFamily::Null,
            },
            _ => PathFamily::Null,
        }
    }
}

/// Classifies a point; boundary membership is decided on closed sets in the
/// order R2, R3, R1.
pub fn classify_region(p: Point, rho: f64) -> Region {
    let side = if p.x > 0.0 {
        Side::RightHalf
    } else if p.x < 0.0 {
        Side::LeftHalf
    } else {
        Side::Axis
    };
    let dr = (p.x - rho) * (p.x - rho) + p.y * p.y;
    let dl = (p.x + rho) * (p.x + rho) + p.y * p.y;
    let tag = if dr <= rho * rho || dl <= rho * rho {
        RegionTag::R2
    } else if p.y > 0.0 && dr <= 9.0 * rho * rho && dl <= 9.0 * rho * rho {
        RegionTag::R3
    } else {
        RegionTag::R1
    };
    Region { tag, side }
}

/// Shortest free-heading path result; `length` is the classic `F` value.
#[derive(Debug, Clone, PartialEq)]
pub struct RdpSolution {
    pub length: f64,
    pub path: DubinsPath,
    pub family: PathFamily,
}

/// Endpoint residual accepted when validating a candidate construction.
const ENDPOINT_TOL: f64 = 1e-9;

fn push_path(
    out: &mut Vec<(f64, DubinsPath)>,
    rho: f64,
    segments: Vec<Segment>,
    p: Point,
) {
    if let Ok(path) = DubinsPath::new(Configuration::canonical(), rho, segments) {
        if terminal(&path).position().distance(p) <= ENDPOINT_TOL * rho.max(1.0) {
            out.push((path.total_length(), path));
        }
    }
}

/// CS candidate: arc on the chosen turning circle, then the tangent line
/// through `p`. Returns `(arc radians, line length)`.
fn cs_construction(p: Point, rho: f64, left: bool) -> Option<(f64, f64)> {
    let center_x = if left { -rho } else { rho };
    let wx = p.x - center_x;
    let wy = p.y;
    let s = wx.hypot(wy);
    if s < rho {
        return None;
    }
    let theta_w = wy.atan2(wx);
    let gamma = (rho / s).clamp(-1.0, 1.0).acos();
    if left {
        // CCW from start angle 0; tangent direction (-sin phi, cos phi)
        let phi = theta_w - gamma;
        let ell = -wx * phi.sin() + wy * phi.cos();
        if ell < -1e-12 {
            return None;
        }
        Some((normalize_angle(phi), ell.max(0.0)))
    } else {
        // CW from start angle pi; tangent direction (sin phi, -cos phi)
        let phi = theta_w + gamma;
        let ell = wx * phi.sin() - wy * phi.cos();
        if ell < -1e-12 {
            return None;
        }
        Some((normalize_angle(PI - phi), ell.max(0.0)))
    }
}

/// CC candidates: first arc on the chosen circle, second circle through `p`
/// tangent to it. Both intersection branches, `(first radians, second radians)`.
fn cc_constructions(p: Point, rho: f64, left_first: bool) -> Vec<(f64, f64)> {
    let center_x = if left_first { -rho } else { rho };
    let wx = p.x - center_x;
    let wy = p.y;
    let s = wx.hypot(wy);
    let mut out = Vec::new();
    if s < rho - 1e-12 || s > 3.0 * rho + 1e-12 || s == 0.0 {
        return out;
    }
    // centers of the second circle: |c - c0| = 2ρ and |c - p| = ρ
    let along = (4.0 * rho * rho - rho * rho + s * s) / (2.0 * s);
    let h2 = 4.0 * rho * rho - along * along;
    let h = h2.max(0.0).sqrt();
    let (ux, uy) = (wx / s, wy / s);
    for sign in [1.0, -1.0] {
        let cx = center_x + along * ux - sign * h * uy;
        let cy = along * uy + sign * h * ux;
        if left_first {
            // start angle 0 on C_l, CCW; switch point at angle u
            let u = normalize_angle((cy).atan2(cx - center_x));
            let phi = (p.y - cy).atan2(p.x - cx);
            let v = normalize_angle(u + PI - phi);
            out.push((u, v));
        } else {
            // start angle pi on C_r, CW; switch at angle pi - u
            let u = normalize_angle(PI - (cy).atan2(cx - center_x));
            let phi = (p.y - cy).atan2(p.x - cx);
            // mirrored terminal relation: phi = -(u' + pi - v') with u' = u
            let v = normalize_angle(phi - (PI - u) + PI);
            out.push((u, v));
        }
        if h <= 1e-12 {
            break; // tangent circles coincide; one branch only
        }
    }
    out
}

/// Solves the relaxed Dubins problem to `p`; total on the plane.
pub fn solve_rdp(p: Point, rho: f64) -> RdpSolution {
    assert!(rho > 0.0, "turning radius must be positive");
    if p.norm() <= 1e-15 * rho.max(1.0) {
        return RdpSolution {
            length: 0.0,
            path: DubinsPath::null(rho),
            family: PathFamily::Null,
        };
    }
    let mut cands: Vec<(f64, DubinsPath)> = Vec::new();
    for left in [false, true] {
        if let Some((arc, ell)) = cs_construction(p, rho, left) {
            let kind = if left {
                SegmentKind::LeftArc
            } else {
                SegmentKind::RightArc
            };
            let segs = vec![
                Segment::new(kind, arc).unwrap(),
                Segment::new(SegmentKind::Line, ell).unwrap(),
            ];
            push_path(&mut cands, rho, segs, p);
        }
        for (u, v) in cc_constructions(p, rho, left) {
            let (k1, k2) = if left {
                (SegmentKind::LeftArc, SegmentKind::RightArc)
            } else {
                (SegmentKind::RightArc, SegmentKind::LeftArc)
            };
            let segs = vec![Segment::new(k1, u).unwrap(), Segment::new(k2, v).unwrap()];
            push_path(&mut cands, rho, segs, p);
        }
    }
    let (length, path) = cands
        .into_iter()
        .min_by(|a, b| a.0.partial_cmp(&b.0).unwrap())
        .expect("at least one RDP candidate must reach any nonzero point");
    let family = PathFamily::of_segments(path.segments());
    RdpSolution {
        length,
        path,
        family,
    }
}

/// Shorthand for the classic `F[x, y]` value.
pub fn rdp_length(p: Point, rho: f64) -> f64 {
    solve_rdp(p, rho).length
}
