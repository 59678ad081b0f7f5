//! Byte-stable writers: the solution document (TOML-compatible key/value
//! tree) and the sampled trajectory table.

use std::fmt::Write as _;

use dubins_intercept::geometry::{at_length, DubinsPath, Point};
use dubins_intercept::mtip::Candidate;
use dubins_intercept::rdp::RegionTag;

use crate::instance::{InstanceSpec, Mode};

/// Fixed 12-significant-digit float rendering.
pub fn num(x: f64) -> String {
    format!("{x:.11e}")
}

fn pair(p: [f64; 2]) -> String {
    format!("[{}, {}]", num(p[0]), num(p[1]))
}

pub struct SolutionRecord<'a> {
    pub spec: &'a InstanceSpec,
    pub t_m: f64,
    pub candidate: &'a Candidate,
    /// World-frame path (equals the candidate's path for canonical starts).
    pub path: &'a DubinsPath,
    pub intercept: Point,
    pub oracle: Option<(f64, f64, bool)>,
}

/// Renders one solution record. `index` adds a `[[solution]]` table header
/// for batch documents.
pub fn solution_doc(rec: &SolutionRecord<'_>, index: Option<usize>) -> String {
    let mut out = String::new();
    if let Some(i) = index {
        out.push_str("[[solution]]\n");
        let _ = writeln!(out, "index = {i}");
    }
    let spec = rec.spec;
    let _ = writeln!(
        out,
        "mode = \"{}\"",
        match spec.mode {
            Mode::Intercept => "intercept",
            Mode::Drift => "drift",
        }
    );
    let _ = writeln!(out, "rho = {}", num(spec.rho));
    let _ = writeln!(out, "pursuer_speed = {}", num(spec.pursuer_speed()));
    let start = spec.start_config();
    let _ = writeln!(
        out,
        "start = [{}, {}, {}]",
        num(start.x),
        num(start.y),
        num(start.theta.to_degrees())
    );
    match spec.mode {
        Mode::Intercept => {
            let _ = writeln!(out, "target_p0 = {}", pair(spec.p0.unwrap()));
            let _ = writeln!(out, "target_v = {}", pair(spec.v.unwrap()));
        }
        Mode::Drift => {
            let _ = writeln!(out, "terminal = {}", pair(spec.terminal.unwrap()));
            let _ = writeln!(out, "wind = {}", pair(spec.wind.unwrap()));
        }
    }
    let cand = rec.candidate;
    let _ = writeln!(out, "t_m = {}", num(rec.t_m));
    let _ = writeln!(out, "path_length = {}", num(rec.path.total_length()));
    let _ = writeln!(out, "family = \"{}\"", cand.family_label());
    let _ = writeln!(out, "mirrored = {}", cand.mirrored);
    let _ = writeln!(
        out,
        "region = \"{}\"",
        match cand.region.tag {
            RegionTag::R1 => "R1",
            RegionTag::R2 => "R2",
            RegionTag::R3 => "R3",
        }
    );
    let _ = writeln!(
        out,
        "intercept = [{}, {}]",
        num(rec.intercept.x),
        num(rec.intercept.y)
    );
    let _ = writeln!(out, "endpoint_residual = {}", num(cand.residual));
    let kinds: Vec<String> = rec
        .path
        .segments()
        .iter()
        .map(|s| format!("\"{}\"", s.kind.letter()))
        .collect();
    let values: Vec<String> = rec
        .path
        .segments()
        .iter()
        .map(|s| num(s.magnitude))
        .collect();
    let _ = writeln!(out, "segment_kinds = [{}]", kinds.join(", "));
    let _ = writeln!(out, "segment_values = [{}]", values.join(", "));
    if let Some((t_oracle, diff, ok)) = rec.oracle {
        let _ = writeln!(out, "oracle_t_m = {}", num(t_oracle));
        let _ = writeln!(out, "oracle_abs_diff = {}", num(diff));
        let _ = writeln!(out, "oracle_ok = {ok}");
    }
    out
}

/// Sampled trajectory table for the pursuer plus the target's track.
///
/// Intercept mode samples the canonical-speed kinematics in world frame;
/// drift mode emits the ground track (path advected by the wind) and repeats
/// the fixed terminal in the target columns.
pub fn trajectory_csv(
    spec: &InstanceSpec,
    path: &DubinsPath,
    t_m: f64,
    dt: f64,
    wind: Option<Point>,
) -> String {
    let speed = spec.pursuer_speed();
    let mut out = String::from("t,x,y,theta,u,target_x,target_y\n");
    let n = (t_m / dt).ceil().max(1.0) as usize;
    for k in 0..=n {
        let t = (k as f64 * dt).min(t_m);
        let (config, u) = at_length(path, speed * t);
        let (x, y) = match wind {
            Some(w) => (config.x + w.x * t, config.y + w.y * t),
            None => (config.x, config.y),
        };
        let (tx, ty) = match spec.mode {
            Mode::Intercept => {
                let p0 = spec.p0.unwrap();
                let v = spec.v.unwrap();
                (p0[0] + v[0] * t, p0[1] + v[1] * t)
            }
            Mode::Drift => {
                let term = spec.terminal.unwrap();
                (term[0], term[1])
            }
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            num(t),
            num(x),
            num(y),
            num(config.theta),
            num(u),
            num(tx),
            num(ty)
        );
        if t >= t_m {
            break;
        }
    }
    out
}
