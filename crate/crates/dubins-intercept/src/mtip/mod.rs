//! Minimum-time intercept solver.
//!
//! Candidates are enumerated from the CS and CC fixed-point equations on the
//! instance and on its y-axis mirror, validated by rollout against the
//! target's motion, and the minimum-time survivor is returned. The selected
//! candidate is cross-checked against the structural laws: the intercept
//! time never undercuts the free-heading shortest path to the intercept
//! point, and in region interiors it matches one of the three length
//! functions that characterize reachability there.

pub mod cc;
pub mod cs;

use std::f64::consts::PI;

use crate::elongation::elongation_any;
use crate::error::SolveError;
use crate::geometry::{
    terminal, Configuration, DubinsPath, Point, TargetMotion, TrajectorySample,
};
use crate::rdp::{classify_region, rdp_length, solve_rdp, PathFamily, Region, RegionTag};

pub use cc::{cc_coefficients, gcc_chain, solve_cc_family, CcCoefficients, GccChain};
pub use cs::{
    cs_coefficients, cs_coefficients_direct, gcs_value, solve_rs_family, CsCoefficients,
    VxDegenerate, EPS_VX,
};

/// Rollout endpoint residual accepted for a candidate, relative to `ρ`.
pub(crate) const ENDPOINT_TOL: f64 = 1e-8;
/// Candidates faster than this are the trivial `t = 0` artifacts.
pub(crate) const MIN_TIME: f64 = 1e-12;
/// Search ceiling for the two-arc radian sum (one full turn per arc).
pub(crate) const ETA_MAX: f64 = 4.0 * PI;
/// Tolerance used when matching a candidate time against the length
/// functions at its terminal.
pub(crate) const REF_TOL: f64 = 1e-6;
/// Candidates within this time of each other tie-break structurally.
const TIE_TOL: f64 = 1e-9;
/// Margin for deciding strict interiority of a region.
const INTERIOR_MARGIN: f64 = 1e-7;

/// Elongation branch a two-arc candidate's time coincides with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElongationBranch {
    Minus,
    Plus,
}

/// One validated intercept candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    /// Intercept time (equals the path length at unit speed).
    pub t: f64,
    pub family: PathFamily,
    pub path: DubinsPath,
    pub terminal: Point,
    pub region: Region,
    pub mirrored: bool,
    /// Rollout endpoint miss against the target position at `t`.
    pub residual: f64,
    /// Whether `t` matches the free-heading shortest-path length at the
    /// terminal (the candidate follows the relaxed-problem optimum).
    pub matches_f: bool,
    /// Which elongation length (if either) `t` coincides with.
    pub elongation: Option<ElongationBranch>,
}

impl Candidate {
    /// Builds a candidate and labels it against the length functions at its
    /// terminal point.
    pub(crate) fn from_parts(
        t: f64,
        path: DubinsPath,
        terminal_pt: Point,
        residual: f64,
        rho: f64,
    ) -> Self {
        let family = PathFamily::of_segments(path.segments());
        let region = classify_region(terminal_pt, rho);
        let matches_f = (t - rdp_length(terminal_pt, rho)).abs() <= REF_TOL * rho.max(1.0);
        let s = (terminal_pt.x.abs() + rho).hypot(terminal_pt.y);
        let elongation = if s > rho * (1.0 + 1e-9) && s <= 3.0 * rho * (1.0 + 1e-9) {
            let e = elongation_any(terminal_pt, rho);
            if (t - e.l_minus).abs() <= REF_TOL * rho.max(1.0) {
                Some(ElongationBranch::Minus)
            } else if (t - e.l_plus).abs() <= REF_TOL * rho.max(1.0) {
                Some(ElongationBranch::Plus)
            } else {
                None
            }
        } else {
            None
        };
        Self {
            t,
            family,
            path,
            terminal: terminal_pt,
            region,
            mirrored: false,
            residual,
            matches_f,
            elongation,
        }
    }

    /// Maps a candidate solved on the mirrored instance back to the
    /// original frame.
    fn mirror_back(self, rho: f64) -> Self {
        let mut out = Candidate::from_parts(
            self.t,
            self.path.mirror_x(),
            self.terminal.mirror_x(),
            self.residual,
            rho,
        );
        out.mirrored = true;
        out
    }

    /// Human-readable family label, with the elongation branch when the
    /// candidate is one of the two tangent-circle lengths rather than the
    /// relaxed-problem optimum.
    pub fn family_label(&self) -> String {
        match self.elongation {
            Some(branch) if !self.matches_f => {
                let sign = match branch {
                    ElongationBranch::Minus => '-',
                    ElongationBranch::Plus => '+',
                };
                match self.family {
                    PathFamily::Lr => format!("L{sign}R"),
                    PathFamily::Rl => format!("R{sign}L"),
                    other => other.label().to_string(),
                }
            }
            _ => self.family.label().to_string(),
        }
    }
}

/// Solver output: the winning candidate plus the full validated list.
#[derive(Debug, Clone, PartialEq)]
pub struct InterceptSolution {
    pub t_m: f64,
    pub candidate: Candidate,
    pub all_candidates: Vec<Candidate>,
}

fn family_rank(f: PathFamily) -> u8 {
    match f {
        PathFamily::Rs => 0,
        PathFamily::Ls => 1,
        PathFamily::Lr => 2,
        PathFamily::Rl => 3,
        PathFamily::R => 4,
        PathFamily::L => 5,
        PathFamily::S => 6,
        PathFamily::Null => 7,
    }
}

fn better(a: &Candidate, b: &Candidate) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if (a.t - b.t).abs() > TIE_TOL {
        return a.t.partial_cmp(&b.t).unwrap();
    }
    (a.path.segments().len(), family_rank(a.family), a.mirrored)
        .cmp(&(b.path.segments().len(), family_rank(b.family), b.mirrored))
        .then(Ordering::Equal)
}

fn interior_of(p: Point, rho: f64) -> Option<RegionTag> {
    let m = INTERIOR_MARGIN * rho.max(1.0);
    let dr = (p.x - rho).hypot(p.y);
    let dl = (p.x + rho).hypot(p.y);
    if dr < rho - m || dl < rho - m {
        return Some(RegionTag::R2);
    }
    let outside_disks = dr > rho + m && dl > rho + m;
    if p.y > m && dr < 3.0 * rho - m && dl < 3.0 * rho - m && outside_disks {
        return Some(RegionTag::R3);
    }
    if outside_disks && (p.y < -m || dr > 3.0 * rho + m || dl > 3.0 * rho + m) {
        return Some(RegionTag::R1);
    }
    None
}

fn verify_selected(best: &Candidate, rho: f64) -> Result<(), SolveError> {
    let tol = REF_TOL * rho.max(1.0);
    let f = rdp_length(best.terminal, rho);
    if best.t < f - tol {
        return Err(SolveError::ConsistencyViolation {
            law: "t_m >= F[E(t_m)]",
            t_m: best.t,
            reference: f,
        });
    }
    match interior_of(best.terminal, rho) {
        Some(RegionTag::R1) | Some(RegionTag::R2) => {
            if (best.t - f).abs() > tol {
                return Err(SolveError::ConsistencyViolation {
                    law: "t_m = F[E(t_m)] in int(R1 u R2)",
                    t_m: best.t,
                    reference: f,
                });
            }
        }
        Some(RegionTag::R3) => {
            let e = elongation_any(best.terminal, rho);
            let gap = (best.t - f)
                .abs()
                .min((best.t - e.l_minus).abs())
                .min((best.t - e.l_plus).abs());
            if gap > tol {
                return Err(SolveError::ConsistencyViolation {
                    law: "t_m in {F, L-, L+}[E(t_m)] in int(R3)",
                    t_m: best.t,
                    reference: f,
                });
            }
        }
        None => {} // terminal on a region boundary: no interior law applies
    }
    Ok(())
}

/// Solves the minimum-time intercept problem in the canonical frame
/// (start `(0, 0, π/2)`, pursuer speed 1).
pub fn solve_mtip(m: &TargetMotion, rho: f64) -> Result<InterceptSolution, SolveError> {
    assert!(rho > 0.0, "turning radius must be positive");
    let mut candidates: Vec<Candidate> = Vec::new();

    if m.speed() <= EPS_VX {
        // stationary target: the problem is the relaxed Dubins problem
        let sol = solve_rdp(m.p0(), rho);
        let t = sol.length;
        if t <= MIN_TIME {
            return Err(SolveError::NoCandidate);
        }
        let cand = Candidate::from_parts(t, sol.path, m.p0(), 0.0, rho);
        return Ok(InterceptSolution {
            t_m: t,
            candidate: cand.clone(),
            all_candidates: vec![cand],
        });
    }

    for mirrored in [false, true] {
        let inst = if mirrored { m.mirror_x() } else { *m };
        let mut found = solve_rs_family(&inst, rho);
        found.extend(solve_cc_family(&inst, rho));
        for cand in found {
            let cand = if mirrored {
                cand.mirror_back(rho)
            } else {
                cand
            };
            // re-validate in the original frame
            let target = m.position_at_unchecked(cand.t);
            let miss = terminal(&cand.path).position().distance(target);
            if miss <= ENDPOINT_TOL * rho.max(1.0) && cand.t > MIN_TIME {
                candidates.push(cand);
            }
        }
    }

    candidates.sort_by(better);
    let best = candidates.first().cloned().ok_or(SolveError::NoCandidate)?;
    verify_selected(&best, rho)?;
    Ok(InterceptSolution {
        t_m: best.t,
        candidate: best,
        all_candidates: candidates,
    })
}

/// Drift-field shortest-path solution: the intercept solution of the
/// equivalent moving-target instance, plus the drift vector for mapping
/// trajectories to the inertial frame.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftSolution {
    pub solution: InterceptSolution,
    pub wind: Point,
    pub terminal: Point,
}

/// Shortest bounded-curvature path to `terminal` under a constant ambient
/// drift `wind` (`‖wind‖ < 1`), solved as the intercept of a virtual target
/// starting at `terminal` with velocity `−wind`.
pub fn solve_drift(terminal_pt: Point, wind: Point, rho: f64) -> Result<DriftSolution, SolveError> {
    let m = TargetMotion::new(terminal_pt, Point::new(-wind.x, -wind.y))?;
    let solution = solve_mtip(&m, rho)?;
    Ok(DriftSolution {
        solution,
        wind,
        terminal: terminal_pt,
    })
}

impl DriftSolution {
    /// Ground-frame trajectory: the wind-frame rollout advected by the
    /// drift. Its endpoint coincides with the requested terminal.
    pub fn inertial_trajectory(&self, dt: f64) -> Vec<TrajectorySample> {
        let (_, samples) = crate::geometry::rollout(&self.solution.candidate.path, dt);
        samples
            .into_iter()
            .map(|s| TrajectorySample {
                x: s.x + self.wind.x * s.t,
                y: s.y + self.wind.y * s.t,
                ..s
            })
            .collect()
    }
}

/// World-frame intercept problem: arbitrary start pose and pursuer speed.
///
/// The instance is canonicalized by a rigid transform and time scaling
/// (positions translated/rotated so the start is `(0, 0, π/2)`, velocities
/// divided by the pursuer speed), solved, and mapped back. Returned times
/// are world times, the path starts at the world start pose.
pub fn solve_mtip_from(
    start: Configuration,
    pursuer_speed: f64,
    target_p0: Point,
    target_v: Point,
    rho: f64,
) -> Result<(f64, Candidate), SolveError> {
    assert!(pursuer_speed > 0.0, "pursuer speed must be positive");
    let rot = PI / 2.0 - start.theta;
    let (sin_r, cos_r) = rot.sin_cos();
    let xform = |p: Point| -> Point {
        let dx = p.x - start.x;
        let dy = p.y - start.y;
        Point::new(cos_r * dx - sin_r * dy, sin_r * dx + cos_r * dy)
    };
    let rot_v = |p: Point| -> Point {
        Point::new(
            (cos_r * p.x - sin_r * p.y) / pursuer_speed,
            (sin_r * p.x + cos_r * p.y) / pursuer_speed,
        )
    };
    let m = TargetMotion::new(xform(target_p0), rot_v(target_v))?;
    let sol = solve_mtip(&m, rho)?;
    let cand = &sol.candidate;
    // map the path back: same segments, world start pose
    let path = DubinsPath::new(start, rho, cand.path.segments().to_vec())
        .expect("canonical path segments remain valid");
    let world_terminal = terminal(&path).position();
    let mut world_cand = cand.clone();
    world_cand.path = path;
    world_cand.terminal = world_terminal;
    Ok((sol.t_m / pursuer_speed, world_cand))
}
