//! The CS family: right-turn-then-straight intercepts through the
//! trig-linear fixed-point equation in the first-arc radian.
//!
//! The equation's coefficients come from eliminating the straight length and
//! the intercept point from the arc-plus-tangent geometry against the
//! target's uniform motion. The assembly below uses the division-free form
//! (equivalently the re-derived `a1/a2/a3` route); both are exposed and agree
//! wherever both are defined.

use std::f64::consts::TAU;

use crate::geometry::{
    terminal, Configuration, DubinsPath, Segment, SegmentKind, TargetMotion,
};
use crate::rootfinding::TrigLinearFn;

use super::{Candidate, ENDPOINT_TOL, MIN_TIME};

/// Coefficients of the CS fixed-point equation
/// `A1 sin α + A2 cos α + α (A3 cos α + A4 sin α) + A5 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsCoefficients {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub big_a1: f64,
    pub big_a2: f64,
    pub big_a3: f64,
    pub big_a4: f64,
    pub big_a5: f64,
}

/// Below this `|v_x|` the `a2 = x0/v_x` intermediates are not representable.
pub const EPS_VX: f64 = 1e-9;

/// Signals that the `a`-intermediate route divides by a vanishing `v_x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VxDegenerate;

/// Assembles the CS coefficients through the `a1/a2/a3` intermediates.
///
/// Fails when `|v_x| <= EPS_VX`; callers reroute to
/// [`cs_coefficients_direct`], which produces the same `A` values without
/// dividing by `v_x`.
pub fn cs_coefficients(m: &TargetMotion, rho: f64) -> Result<CsCoefficients, VxDegenerate> {
    let v = m.velocity();
    if v.x.abs() <= EPS_VX {
        return Err(VxDegenerate);
    }
    let p0 = m.p0();
    let a1 = rho;
    let a2 = p0.x / v.x;
    let a3 = -p0.y + (v.y / v.x) * p0.x;
    Ok(CsCoefficients {
        a1,
        a2,
        a3,
        big_a1: a3 - a2 * v.y - rho * v.x,
        big_a2: -a1 - rho * v.y + a2 * v.x,
        big_a3: rho * v.x,
        big_a4: -rho * v.y,
        big_a5: a1 * v.y - a3 * v.x + rho,
    })
}

/// Division-free assembly of the same coefficients (the `a2 v_y` and
/// `a2 v_x` terms cancel symbolically against `a3` and `x0`).
pub fn cs_coefficients_direct(m: &TargetMotion, rho: f64) -> CsCoefficients {
    let v = m.velocity();
    let p0 = m.p0();
    CsCoefficients {
        a1: rho,
        a2: f64::NAN,
        a3: f64::NAN,
        big_a1: -rho * v.x - p0.y,
        big_a2: p0.x - rho * v.y - rho,
        big_a3: rho * v.x,
        big_a4: -rho * v.y,
        big_a5: rho * v.y - p0.x * v.y + p0.y * v.x + rho,
    }
}

impl CsCoefficients {
    pub fn as_trig_linear(&self) -> TrigLinearFn {
        TrigLinearFn::new(
            self.big_a1,
            self.big_a2,
            self.big_a3,
            self.big_a4,
            self.big_a5,
        )
    }
}

/// Value of the CS fixed-point function at `alpha`.
pub fn gcs_value(c: &CsCoefficients, alpha: f64) -> f64 {
    c.as_trig_linear().value(alpha)
}

fn newton_polish_trig(f: &TrigLinearFn, mut x: f64, lo: f64, hi: f64) -> f64 {
    for _ in 0..4 {
        let v = f.value(x);
        let d = f.a1 * x.cos() - f.a2 * x.sin()
            + (f.a3 * x.cos() + f.a4 * x.sin())
            + x * (f.a4 * x.cos() - f.a3 * x.sin());
        if d == 0.0 {
            break;
        }
        let next = x - v / d;
        if !next.is_finite() || next < lo || next > hi {
            break;
        }
        if f.value(next).abs() >= v.abs() {
            break;
        }
        x = next;
    }
    x
}

/// Enumerates the validated right-turn-then-straight intercept candidates.
///
/// Every zero `α` of the fixed-point equation on `[0, 2π]` is mapped back to
/// an `R_α S_d` path; candidates with negative straight length, nonpositive
/// time, or a rollout that misses the target are discarded.
pub fn solve_rs_family(m: &TargetMotion, rho: f64) -> Vec<Candidate> {
    let coeffs = cs_coefficients(m, rho).unwrap_or_else(|_| cs_coefficients_direct(m, rho));
    let f = coeffs.as_trig_linear();
    let v = m.velocity();
    let p0 = m.p0();

    let mut out = Vec::new();
    for alpha in f.zeros_in(0.0, TAU) {
        let alpha = newton_polish_trig(&f, alpha, 0.0, TAU);
        // intercept time from whichever linear relation is better conditioned
        let den_x = v.x - alpha.sin();
        let den_y = v.y - alpha.cos();
        let t = if den_x.abs() >= den_y.abs() {
            (rho * (1.0 - alpha.cos()) - rho * alpha * alpha.sin() - p0.x) / den_x
        } else {
            (rho * alpha.sin() - rho * alpha * alpha.cos() - p0.y) / den_y
        };
        if !t.is_finite() || t <= MIN_TIME {
            continue;
        }
        let d = t - rho * alpha;
        if d < -1e-9 {
            continue;
        }
        let segments = vec![
            Segment::new(SegmentKind::RightArc, alpha).unwrap(),
            Segment::new(SegmentKind::Line, d.max(0.0)).unwrap(),
        ];
        let Ok(path) = DubinsPath::new(Configuration::canonical(), rho, segments) else {
            continue;
        };
        let target = m.position_at_unchecked(t);
        let residual = terminal(&path).position().distance(target);
        if residual > ENDPOINT_TOL * rho.max(1.0) {
            continue;
        }
        out.push(Candidate::from_parts(t, path, target, residual, rho));
    }
    out
}
