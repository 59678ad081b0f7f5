//! The two `L_αR` paths through a point of R3 that stay tangent to the
//! initial left turning circle, and the feasible-length rule they induce.
//!
//! For `p` in the interior of `R3 ∩ {x > 0}` there are exactly two circles
//! of radius `ρ` through `p` tangent to `C_l`; their centers are the
//! intersections of the radius-`2ρ` circle about `c0_l` with the radius-`ρ`
//! circle about `p`. The two resulting path lengths bound the gap of
//! unreachable durations: lengths in `(l_minus, l_plus)` admit no feasible
//! path to `p`, everything in `[F, l_minus] ∪ [l_plus, ∞)` does.

use std::f64::consts::PI;

use crate::error::ElongationError;
use crate::geometry::{
    normalize_angle, Configuration, DubinsPath, Point, Segment, SegmentKind,
};
use crate::rdp::{classify_region, rdp_length, RegionTag};

/// The elongation pair at a point, with the producing arc angles.
#[derive(Debug, Clone, PartialEq)]
pub struct ElongationPair {
    pub l_minus: f64,
    pub l_plus: f64,
    /// First-arc tangency angle `ξ − δ` (may be negative in the degenerate
    /// corner slivers; the stored path always uses forward arcs).
    pub alpha_minus: f64,
    /// First-arc tangency angle `ξ + δ`.
    pub alpha_plus: f64,
    /// Angle from the `+x` axis of the vector `c0_l → p`.
    pub xi: f64,
    pub path_minus: DubinsPath,
    pub path_plus: DubinsPath,
    /// The two tangent circles coincide (double tangency on the R3 rim).
    pub degenerate: bool,
}

/// Relative tolerance deciding the double-tangency degeneracy.
const DEGENERATE_TOL: f64 = 1e-9;

fn lr_path_through(alpha: f64, p: Point, rho: f64) -> (DubinsPath, f64) {
    // forward arc radians; a negative tangency angle wraps a full turn
    let a = normalize_angle(alpha);
    let cx = -rho + 2.0 * rho * alpha.cos();
    let cy = 2.0 * rho * alpha.sin();
    let phi = (p.y - cy).atan2(p.x - cx);
    let beta = normalize_angle(a + PI - phi);
    let path = DubinsPath::new(
        Configuration::canonical(),
        rho,
        vec![
            Segment::new(SegmentKind::LeftArc, a).unwrap(),
            Segment::new(SegmentKind::RightArc, beta).unwrap(),
        ],
    )
    .unwrap();
    let len = rho * (a + beta);
    (path, len)
}

/// Computes the elongation pair for `p ∈ R3` with `x ≥ 0`.
///
/// Points outside that set are rejected; the double-tangency rim (distance
/// `3ρ` from `c0_l`) is reported with `degenerate = true` and
/// `l_minus = l_plus`.
pub fn elongation(p: Point, rho: f64) -> Result<ElongationPair, ElongationError> {
    let region = classify_region(p, rho);
    if region.tag != RegionTag::R3 || p.x < 0.0 {
        return Err(ElongationError::OutsideDomain { x: p.x, y: p.y });
    }
    Ok(elongation_unchecked(p, rho))
}

/// The same construction without the region gate (used by the feasibility
/// rule, which has already classified the point, and by mirrored callers).
pub fn elongation_unchecked(p: Point, rho: f64) -> ElongationPair {
    let wx = p.x + rho;
    let wy = p.y;
    let s = wx.hypot(wy);
    let xi = wy.atan2(wx);
    // angle at c0_l between c0_l->p and c0_l->center, law of cosines on the
    // (2ρ, ρ, s) triangle
    let cos_delta = ((3.0 * rho * rho + s * s) / (4.0 * rho * s)).clamp(-1.0, 1.0);
    let mut delta = cos_delta.acos();
    let degenerate = (s - 3.0 * rho).abs() <= DEGENERATE_TOL * rho || delta <= DEGENERATE_TOL;
    if degenerate {
        // double tangency: both circles coincide, report one length twice
        delta = 0.0;
    }

    let alpha_minus = xi - delta;
    let alpha_plus = xi + delta;
    let (path_minus, l_minus) = lr_path_through(alpha_minus, p, rho);
    let (path_plus, l_plus) = lr_path_through(alpha_plus, p, rho);
    ElongationPair {
        l_minus,
        l_plus,
        alpha_minus,
        alpha_plus,
        xi,
        path_minus,
        path_plus,
        degenerate,
    }
}

/// Elongation for either half-plane: `x < 0` is handled by mirroring (the
/// lengths are mirror-invariant; the returned paths are the mirrored ones).
pub fn elongation_any(p: Point, rho: f64) -> ElongationPair {
    if p.x >= 0.0 {
        elongation_unchecked(p, rho)
    } else {
        let e = elongation_unchecked(p.mirror_x(), rho);
        ElongationPair {
            path_minus: e.path_minus.mirror_x(),
            path_plus: e.path_plus.mirror_x(),
            ..e
        }
    }
}

/// Whether a feasible Dubins path of length exactly `len` from the canonical
/// start to `p` exists.
///
/// In `R3` the reachable set is `[F, l_minus] ∪ [l_plus, ∞)`; elsewhere it is
/// `[F, ∞)`. Boundaries of `R3` follow the R3 rule (same closed-set order as
/// the region classifier).
pub fn feasible_length(p: Point, rho: f64, len: f64) -> bool {
    if len < 0.0 {
        return false;
    }
    let f = rdp_length(p, rho);
    if len < f - 1e-12 {
        return false;
    }
    if classify_region(p, rho).tag == RegionTag::R3 {
        let e = elongation_any(p, rho);
        let (lo, hi) = if e.l_minus <= e.l_plus {
            (e.l_minus, e.l_plus)
        } else {
            (e.l_plus, e.l_minus)
        };
        if len > lo + 1e-12 && len < hi - 1e-12 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::terminal;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::TAU;

    #[test]
    fn both_paths_reach_the_point() {
        let p = Point::new(0.0, 2.0);
        let e = elongation(p, 1.0).unwrap();
        for path in [&e.path_minus, &e.path_plus] {
            assert!(terminal(path).position().distance(p) <= 1e-9);
            let segs = path.segments();
            assert_eq!(segs[0].kind, SegmentKind::LeftArc);
            assert_eq!(segs[1].kind, SegmentKind::RightArc);
        }
        // frozen construction values for (0, 2)
        assert_abs_diff_eq!(e.l_minus, 2.214297435588181, epsilon = 1e-9);
        assert_abs_diff_eq!(e.l_plus, TAU, epsilon = 1e-9);
        assert_abs_diff_eq!(e.alpha_minus, 0.643501108793284, epsilon = 1e-9);
        assert_abs_diff_eq!(e.alpha_plus, PI / 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(e.xi, 1.10714871779409, epsilon = 1e-9);
        assert!(e.alpha_minus <= e.xi && e.xi <= e.alpha_plus);
    }

    #[test]
    fn ordering_against_f() {
        // sampled interior points of R3 with x > 0
        let pts = [
            Point::new(0.3, 1.7),
            Point::new(0.9, 1.2),
            Point::new(1.6, 1.0),
            Point::new(0.2, 0.7),
        ];
        for p in pts {
            let e = elongation(p, 1.0).unwrap();
            let f = rdp_length(p, 1.0);
            assert!(
                f < e.l_minus && e.l_minus < e.l_plus,
                "F < L- < L+ violated at ({}, {}): {} {} {}",
                p.x,
                p.y,
                f,
                e.l_minus,
                e.l_plus
            );
        }
    }

    #[test]
    fn rejects_outside_domain() {
        assert!(elongation(Point::new(4.0, 0.5), 1.0).is_err()); // R1
        assert!(elongation(Point::new(1.0, 0.2), 1.0).is_err()); // R2
        assert!(elongation(Point::new(-0.5, 1.8), 1.0).is_err()); // x < 0
    }

    #[test]
    fn degenerate_rim() {
        // on the R3 rim the two tangent circles coincide: s = 3 rho (nudged
        // inward so rounding cannot push the point out of R3)
        let p = Point::new(0.0, (9.0_f64 - 1.0).sqrt() * (1.0 - 1e-11));
        let e = elongation(p, 1.0).unwrap();
        assert!(e.degenerate);
        assert_abs_diff_eq!(e.l_minus, e.l_plus, epsilon = 1e-6);
    }

    #[test]
    fn feasibility_rule() {
        let p = Point::new(0.0, 2.0);
        let e = elongation(p, 1.0).unwrap();
        let f = rdp_length(p, 1.0);
        assert!(feasible_length(p, 1.0, f)); // the RDP path itself
        assert!(!feasible_length(p, 1.0, 0.5 * (e.l_minus + e.l_plus))); // gap
        assert!(feasible_length(p, 1.0, e.l_plus)); // gap's upper boundary
        assert!(feasible_length(p, 1.0, e.l_plus + 3.0));
        assert!(!feasible_length(p, 1.0, f - 0.1)); // below the minimum
        // outside R3 any length at or above F works
        let q = Point::new(4.0, -2.0);
        let fq = rdp_length(q, 1.0);
        assert!(feasible_length(q, 1.0, fq + 2.5));
        assert!(!feasible_length(q, 1.0, fq - 1e-6));
    }

    #[test]
    fn continuity_under_small_moves() {
        let p = Point::new(0.5, 1.5);
        let e0 = elongation(p, 1.0).unwrap();
        let eps = 1e-6;
        let e1 = elongation(Point::new(p.x + eps, p.y), 1.0).unwrap();
        assert!((e1.l_minus - e0.l_minus).abs() <= 1e-4);
        assert!((e1.l_plus - e0.l_plus).abs() <= 1e-4);
    }

    #[test]
    fn mirrored_entry_point() {
        let p = Point::new(-0.4, 1.8);
        let e = elongation_any(p, 1.0);
        let em = elongation_any(p.mirror_x(), 1.0);
        assert_abs_diff_eq!(e.l_minus, em.l_minus, epsilon = 1e-12);
        assert_abs_diff_eq!(e.l_plus, em.l_plus, epsilon = 1e-12);
        assert!(terminal(&e.path_minus).position().distance(p) <= 1e-9);
    }
}
