//! Brute-force ground truth for tests: discretized shortest-path search,
//! time-grid intercept scan, and dense zero scanning.
//!
//! Nothing here shares the closed-form tangency algebra with the solver
//! modules; constructions are found by sign-change search over rolled-out
//! geometry and refined by bisection.

use std::f64::consts::TAU;

use crate::elongation::feasible_length;
use crate::error::OracleError;
use crate::geometry::{step_along, Configuration, Point, SegmentKind, TargetMotion};
use crate::rdp::{classify_region, RegionTag};
use crate::rootfinding::SmoothFn;

/// Scan configuration for the intercept oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub t_max: f64,
    pub grid_step: f64,
    pub refine_iters: u32,
}

impl OracleConfig {
    /// Horizon covering the worst-case chase plus one full turn.
    pub fn for_instance(m: &TargetMotion, rho: f64) -> Self {
        Self {
            t_max: 4.0 * (m.p0().norm() / (1.0 - m.speed()) + TAU * rho),
            grid_step: 1e-3,
            refine_iters: 30,
        }
    }
}

fn arc_end(kind: SegmentKind, u: f64, rho: f64) -> Configuration {
    step_along(Configuration::canonical(), kind, rho * u, rho)
}

fn refine_root(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, iters: u32) -> f64 {
    let mut flo = f(lo);
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if flo.signum() * fm.signum() <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

/// Lengths of all two-segment (arc + line, arc + arc) paths from the
/// canonical start that end exactly at `p`, found by dense search over the
/// first-arc radian with bisection refinement.
pub fn two_segment_lengths(p: Point, rho: f64, n: usize) -> Vec<f64> {
    let mut lengths = Vec::new();
    if p.norm() <= 1e-14 * rho.max(1.0) {
        lengths.push(0.0);
        return lengths;
    }
    for kind in [SegmentKind::LeftArc, SegmentKind::RightArc] {
        lengths.extend(first_arc_hits(p, rho, n, kind, true));
        lengths.extend(first_arc_hits(p, rho, n, kind, false));
    }
    lengths.sort_by(|a, b| a.partial_cmp(b).unwrap());
    lengths
}

/// Lengths of the exact-hit paths whose first segment is an arc of `kind`,
/// followed by a straight line (`then_line`) or the opposite arc.
fn first_arc_hits(p: Point, rho: f64, n: usize, kind: SegmentKind, then_line: bool) -> Vec<f64> {
    let mut lengths = Vec::new();
    if then_line {
        // arc then straight: the forward ray after radian u must pass p
        let miss = |u: f64| {
            let c = arc_end(kind, u, rho);
            (p.x - c.x) * c.theta.sin() - (p.y - c.y) * c.theta.cos()
        };
        let ahead = |u: f64| {
            let c = arc_end(kind, u, rho);
            (p.x - c.x) * c.theta.cos() + (p.y - c.y) * c.theta.sin()
        };
        let mut prev = miss(0.0);
        for i in 1..=n {
            let u = TAU * i as f64 / n as f64;
            let cur = miss(u);
            if prev == 0.0 || prev * cur < 0.0 {
                let u0 = refine_root(miss, TAU * (i - 1) as f64 / n as f64, u, 60);
                if ahead(u0) >= -1e-9 {
                    let c = arc_end(kind, u0, rho);
                    lengths.push(rho * u0 + p.distance(c.position()));
                }
            }
            prev = cur;
        }
    } else {
        // arc then opposite arc: the second turning circle must pass p
        let second_center = |u: f64| -> Point {
            let c = arc_end(kind, u, rho);
            match kind {
                SegmentKind::LeftArc => {
                    Point::new(c.x + rho * c.theta.sin(), c.y - rho * c.theta.cos())
                }
                _ => Point::new(c.x - rho * c.theta.sin(), c.y + rho * c.theta.cos()),
            }
        };
        let gap = |u: f64| p.distance(second_center(u)) - rho;
        let mut prev = gap(0.0);
        for i in 1..=n {
            let u = TAU * i as f64 / n as f64;
            let cur = gap(u);
            if prev == 0.0 || prev * cur < 0.0 {
                let u0 = refine_root(gap, TAU * (i - 1) as f64 / n as f64, u, 60);
                let c = arc_end(kind, u0, rho);
                let cc = second_center(u0);
                let phi0 = (c.y - cc.y).atan2(c.x - cc.x);
                let phi1 = (p.y - cc.y).atan2(p.x - cc.x);
                let v = match kind {
                    SegmentKind::LeftArc => (phi0 - phi1).rem_euclid(TAU),
                    _ => (phi1 - phi0).rem_euclid(TAU),
                };
                // confirm the second arc really ends at p
                let end = step_along(
                    c,
                    match kind {
                        SegmentKind::LeftArc => SegmentKind::RightArc,
                        _ => SegmentKind::LeftArc,
                    },
                    rho * v,
                    rho,
                );
                if end.position().distance(p) <= 1e-6 * rho.max(1.0) {
                    lengths.push(rho * (u0 + v));
                }
            }
            prev = cur;
        }
    }
    lengths.sort_by(|a, b| a.partial_cmp(b).unwrap());
    lengths
}

/// Discretized shortest free-heading path length to `p`.
pub fn rdp_oracle(p: Point, rho: f64) -> f64 {
    two_segment_lengths(p, rho, 4000)
        .first()
        .copied()
        .unwrap_or(f64::INFINITY)
}

/// Feasibility of duration `len` to reach `p`, decided entirely from the
/// discretized two-segment search (slow, fully independent of the
/// closed-form elongation).
pub fn slow_feasible(p: Point, rho: f64, len: f64, n: usize) -> bool {
    let lengths = two_segment_lengths(p, rho, n);
    let Some(&fmin) = lengths.first() else {
        return false;
    };
    if len < fmin - 1e-9 {
        return false;
    }
    if classify_region(p, rho).tag == RegionTag::R3 {
        // the unreachable gap is bounded by the two left-tangent arc-arc
        // lengths through the point (mirrored to x >= 0)
        let q = Point::new(p.x.abs(), p.y);
        let pair = first_arc_hits(q, rho, n, SegmentKind::LeftArc, false);
        if let (Some(&lo), Some(&hi)) = (pair.first(), pair.last()) {
            if len > lo + 1e-9 && len < hi - 1e-9 {
                return false;
            }
        }
    }
    true
}

fn scan_first_feasible(
    m: &TargetMotion,
    rho: f64,
    cfg: &OracleConfig,
    feasible: &(dyn Fn(Point, f64) -> bool + Sync),
) -> Option<f64> {
    let n = (cfg.t_max / cfg.grid_step).ceil() as usize;
    const CHUNK: usize = 2048;
    let mut start = 1usize;
    while start <= n {
        let end = (start + CHUNK - 1).min(n);
        let hit = find_feasible_in(m, rho, cfg, feasible, start, end);
        if let Some(i) = hit {
            let t_hi = i as f64 * cfg.grid_step;
            let t_lo = t_hi - cfg.grid_step;
            // bisect the feasibility boundary inside the bracketing cell
            let (mut lo, mut hi) = (t_lo, t_hi);
            for _ in 0..cfg.refine_iters {
                let mid = 0.5 * (lo + hi);
                if feasible(m.position_at_unchecked(mid), mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Some(hi);
        }
        start = end + 1;
    }
    None
}

#[cfg(feature = "parallel")]
fn find_feasible_in(
    m: &TargetMotion,
    rho: f64,
    cfg: &OracleConfig,
    feasible: &(dyn Fn(Point, f64) -> bool + Sync),
    start: usize,
    end: usize,
) -> Option<usize> {
    use rayon::prelude::*;
    let _ = rho;
    (start..=end).into_par_iter().find_first(|&i| {
        let t = i as f64 * cfg.grid_step;
        feasible(m.position_at_unchecked(t), t)
    })
}

#[cfg(not(feature = "parallel"))]
fn find_feasible_in(
    m: &TargetMotion,
    rho: f64,
    cfg: &OracleConfig,
    feasible: &(dyn Fn(Point, f64) -> bool + Sync),
    start: usize,
    end: usize,
) -> Option<usize> {
    let _ = rho;
    (start..=end).find(|&i| {
        let t = i as f64 * cfg.grid_step;
        feasible(m.position_at_unchecked(t), t)
    })
}

/// Smallest feasible intercept time by grid scan over the target's motion,
/// refined on the bracketing cell. The horizon auto-extends (doubling, up to
/// three times) before giving up.
pub fn mtip_oracle(m: &TargetMotion, rho: f64, cfg: &OracleConfig) -> Result<f64, OracleError> {
    let feasible = move |p: Point, t: f64| feasible_length(p, rho, t);
    let mut cfg = *cfg;
    for _ in 0..4 {
        if let Some(t) = scan_first_feasible(m, rho, &cfg, &feasible) {
            return Ok(t);
        }
        cfg.t_max *= 2.0;
    }
    Err(OracleError::HorizonExhausted { t_max: cfg.t_max })
}

/// Fully independent variant of [`mtip_oracle`] whose feasibility test uses
/// only the discretized two-segment search. Much slower; audit use only.
pub fn mtip_oracle_slow(
    m: &TargetMotion,
    rho: f64,
    cfg: &OracleConfig,
) -> Result<f64, OracleError> {
    let feasible = move |p: Point, t: f64| slow_feasible(p, rho, t, 600);
    scan_first_feasible(m, rho, cfg, &feasible)
        .ok_or(OracleError::HorizonExhausted { t_max: cfg.t_max })
}

/// Approximate zeros by sign-change detection over `n` uniform samples with
/// bisection polish. Test-only completeness reference.
pub fn dense_zero_scan(f: &SmoothFn<'_>, n: usize) -> Vec<f64> {
    assert!(n >= 1000, "dense scan needs at least 1e3 samples");
    let (a, b) = f.domain;
    let eval = f.eval;
    let mut zeros = Vec::new();
    let mut prev = eval(a);
    if prev == 0.0 {
        zeros.push(a);
    }
    for i in 1..=n {
        let x = a + (b - a) * i as f64 / n as f64;
        let cur = eval(x);
        if cur == 0.0 {
            zeros.push(x);
        } else if prev * cur < 0.0 {
            let lo = a + (b - a) * (i - 1) as f64 / n as f64;
            zeros.push(refine_root(|t| eval(t), lo, x, 80));
        }
        prev = cur;
    }
    zeros.dedup_by(|p, q| (*p - *q).abs() <= 1e-12 * (b - a).abs());
    zeros
}
