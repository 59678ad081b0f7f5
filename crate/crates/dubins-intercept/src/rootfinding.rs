//! Certified enumeration of all zeros of sufficiently smooth functions on an
//! interval.
//!
//! The workhorse is [`all_zeros`]: given every zero of `f'` on `[a, b]`
//! (the critical scaffold), `f` has at most one zero strictly between two
//! adjacent scaffold points, and that zero is found by bisection when the
//! endpoint values change sign. Scaffold points where `|f|` falls below a
//! value tolerance are zeros themselves (tangential zeros never bisect).
//!
//! [`TrigLinearFn`] covers the family `A1 sin x + A2 cos x + x (A3 cos x +
//! A4 sin x) + A5`, whose critical scaffold reduces to a quartic in
//! `tan(x/2)` through its pole-normalized variant; [`derivative_chain_zeros`]
//! folds `all_zeros` down a chain of exact derivatives.

use std::f64::consts::{PI, TAU};

use crate::error::RootError;

/// Relative value tolerance: `|f(t)| <= VALUE_TOL * scale(f)` counts as zero.
pub const VALUE_TOL: f64 = 1e-10;
/// Relative bracket-width tolerance for bisection.
pub const TIME_TOL: f64 = 1e-12;
/// Zeros closer than this fraction of the interval are merged.
pub const MERGE_TOL: f64 = 1e-10;

/// A scalar function on a closed interval with finitely many zeros.
///
/// The finiteness of the zero set is the caller's responsibility; evaluation
/// must be side-effect-free.
pub struct SmoothFn<'a> {
    pub eval: &'a dyn Fn(f64) -> f64,
    pub domain: (f64, f64),
}

impl<'a> SmoothFn<'a> {
    pub fn new(eval: &'a dyn Fn(f64) -> f64, domain: (f64, f64)) -> Self {
        Self { eval, domain }
    }

    fn call(&self, t: f64) -> f64 {
        (self.eval)(t)
    }
}

/// All zeros of a function on an interval, together with the critical-point
/// scaffold that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    /// Strictly increasing zeros.
    pub zeros: Vec<f64>,
    /// The scaffold the enumeration ran on (sorted).
    pub critical_points: Vec<f64>,
}

/// Bisection on a bracketing interval; the bracket shrinks below
/// `TIME_TOL * (hi - lo)` of the original width.
pub fn bisect(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64, RootError> {
    let (mut lo, mut hi) = (lo, hi);
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() * fhi.signum() > 0.0 {
        return Err(RootError::NoBracket);
    }
    let tol = TIME_TOL * (hi - lo).abs();
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if flo.signum() * fm.signum() <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Enumerates every zero of `f` on its domain from the zeros of `f'`.
///
/// `critical_points` must contain all zeros of `f'` in the domain; the
/// endpoints are adjoined automatically. Each scaffold point with small
/// `|f|` is taken as a zero; each adjacent pair with a strict sign change
/// contributes exactly one bisection zero. The right endpoint is tested for
/// a value-zero as well.
pub fn all_zeros(f: &SmoothFn<'_>, critical_points: &[f64]) -> ZeroSet {
    let (a, b) = f.domain;
    let mut pts: Vec<f64> = Vec::with_capacity(critical_points.len() + 2);
    pts.push(a);
    pts.extend(critical_points.iter().copied().filter(|&c| c > a && c < b));
    pts.push(b);
    pts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    pts.dedup_by(|p, q| (*p - *q).abs() <= f64::EPSILON * (1.0 + b.abs() + a.abs()));

    let vals: Vec<f64> = pts.iter().map(|&t| f.call(t)).collect();
    // value scale from the critical points only: endpoints may sit next to a
    // pole of a normalized variant and would poison the tolerance
    let scale = critical_points
        .iter()
        .filter(|&&c| c >= a && c <= b)
        .map(|&c| f.call(c).abs())
        .fold(1.0_f64, f64::max);
    let tol_val = VALUE_TOL * scale;

    let mut zeros = Vec::new();
    for i in 0..pts.len() - 1 {
        if vals[i].abs() <= tol_val {
            zeros.push(pts[i]);
        } else if vals[i + 1].abs() > tol_val && vals[i] * vals[i + 1] < 0.0 {
            if let Ok(z) = bisect(|t| f.call(t), pts[i], pts[i + 1]) {
                zeros.push(z);
            }
        }
    }
    if vals[pts.len() - 1].abs() <= tol_val {
        zeros.push(b);
    }

    zeros.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let merge = MERGE_TOL * (b - a).abs();
    let mut merged: Vec<f64> = Vec::with_capacity(zeros.len());
    for z in zeros {
        match merged.last() {
            Some(&last) if z - last <= merge => {}
            _ => merged.push(z),
        }
    }
    ZeroSet {
        zeros: merged,
        critical_points: pts,
    }
}

/// Folds [`all_zeros`] down a derivative chain `chain[k]' = chain[k+1]`.
///
/// `base_critical_points` are the zeros of the last element's derivative,
/// supplied analytically; the zeros of each level serve as the critical
/// scaffold of the level above. Returns the zeros of `chain[0]`.
pub fn derivative_chain_zeros(
    chain: &[&dyn Fn(f64) -> f64],
    domain: (f64, f64),
    base_critical_points: &[f64],
) -> Result<ZeroSet, RootError> {
    if chain.is_empty() {
        return Err(RootError::EmptyChain);
    }
    let mut crit: Vec<f64> = base_critical_points.to_vec();
    let mut out = None;
    for level in chain.iter().rev() {
        let f = SmoothFn::new(*level, domain);
        let zs = all_zeros(&f, &crit);
        crit = zs.zeros.clone();
        out = Some(zs);
    }
    Ok(out.unwrap())
}

// ---------------------------------------------------------------------------
// polynomial solvers
// ---------------------------------------------------------------------------

fn newton_polish(coeffs: &[f64], mut x: f64) -> f64 {
    // coeffs in descending degree
    for _ in 0..8 {
        let mut p = 0.0;
        let mut dp = 0.0;
        for &c in coeffs {
            dp = dp * x + p;
            p = p * x + c;
        }
        if dp == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 1e-15 * (1.0 + x.abs()) {
            break;
        }
    }
    x
}

fn poly_eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn dedupe_sorted(mut roots: Vec<f64>) -> Vec<f64> {
    roots.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let scale = roots.iter().fold(1.0_f64, |m, r| m.max(r.abs()));
    let mut out: Vec<f64> = Vec::with_capacity(roots.len());
    for r in roots {
        match out.last() {
            Some(&last) if (r - last).abs() <= 1e-9 * scale => {}
            _ => out.push(r),
        }
    }
    out
}

/// Real roots of `c1 x + c0 = 0`.
fn linear_real_roots(c1: f64, c0: f64) -> Vec<f64> {
    if c1 == 0.0 {
        Vec::new()
    } else {
        vec![-c0 / c1]
    }
}

/// Real roots of `c2 x^2 + c1 x + c0 = 0` (stable form).
fn quadratic_real_roots(c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc < 0.0 {
        return Vec::new();
    }
    let sq = disc.sqrt();
    let q = -0.5 * (c1 + c1.signum().max(0.0).mul_add(2.0, -1.0) * sq);
    // signum trick misbehaves at c1 == 0; fall back to the plain form there
    if c1 == 0.0 {
        let r = (sq / (2.0 * c2)).abs();
        return if r == 0.0 { vec![0.0] } else { vec![-r, r] };
    }
    let mut roots = vec![q / c2];
    if q != 0.0 {
        roots.push(c0 / q);
    } else {
        roots.push(0.0);
    }
    roots
}

/// Real roots of a cubic, Cardano with the trigonometric three-real branch.
///
/// The degradation test must not compare the leading coefficient against the
/// largest one: a monic cubic with huge lower coefficients is still a cubic
/// (its real root is just large), and dropping the degree loses it.
pub fn cubic_real_roots(c3: f64, c2: f64, c1: f64, c0: f64) -> Vec<f64> {
    let scale = c3.abs().max(c2.abs()).max(c1.abs()).max(c0.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if c3.abs() <= 1e-30 * scale {
        return quadratic_real_roots(c2, c1, c0);
    }
    let a = c2 / c3;
    let b = c1 / c3;
    let c = c0 / c3;
    // depressed: t^3 + p t + q, x = t - a/3
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let coeffs = [c3, c2, c1, c0];
    let mut roots = Vec::new();
    if disc > 0.0 {
        let sq = disc.sqrt();
        let u = (-q / 2.0 + sq).cbrt();
        let v = (-q / 2.0 - sq).cbrt();
        roots.push(newton_polish(&coeffs, u + v + shift));
    } else if p.abs() <= 1e-300 {
        roots.push(newton_polish(&coeffs, (-q).cbrt() + shift));
    } else {
        // three real roots
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        for k in 0..3 {
            let t = m * (phi - k as f64 * TAU / 3.0).cos();
            roots.push(newton_polish(&coeffs, t + shift));
        }
    }
    dedupe_sorted(roots)
}

/// All real roots of `c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0`, multiplicity
/// collapsed, sorted ascending. Degree degradation falls through to the
/// cubic/quadratic/linear solvers; the all-zero polynomial is an error.
pub fn quartic_real_roots(
    c4: f64,
    c3: f64,
    c2: f64,
    c1: f64,
    c0: f64,
) -> Result<Vec<f64>, RootError> {
    let scale = c4
        .abs()
        .max(c3.abs())
        .max(c2.abs())
        .max(c1.abs())
        .max(c0.abs());
    if scale == 0.0 {
        return Err(RootError::ZeroPolynomial);
    }
    if c4.abs() <= 1e-14 * scale {
        if c3.abs() <= 1e-14 * scale {
            if c2.abs() <= 1e-14 * scale {
                return Ok(linear_real_roots(c1, c0));
            }
            return Ok(quadratic_real_roots(c2, c1, c0));
        }
        return Ok(cubic_real_roots(c3, c2, c1, c0));
    }

    let a = c3 / c4;
    let b = c2 / c4;
    let c = c1 / c4;
    let d = c0 / c4;
    // depressed quartic: y^4 + p y^2 + q y + r, x = y - a/4
    let p = b - 3.0 * a * a / 8.0;
    let q = c - a * b / 2.0 + a * a * a / 8.0;
    let r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    let shift = -a / 4.0;
    let coeffs = [c4, c3, c2, c1, c0];

    let mut roots = Vec::new();
    if q.abs() <= 1e-12 * (1.0 + p.abs() + r.abs()) {
        // biquadratic
        for z in quadratic_real_roots(1.0, p, r) {
            if z >= -1e-12 {
                let zz = z.max(0.0).sqrt();
                roots.push(newton_polish(&coeffs, zz + shift));
                roots.push(newton_polish(&coeffs, -zz + shift));
            }
        }
    } else {
        // Ferrari resolvent: z^3 + 2p z^2 + (p^2 - 4r) z - q^2 = 0 has a
        // nonnegative real root z0 = u^2 splitting the quartic in two
        // quadratics y^2 -+ u y + (p + z0 +- q/u)/2.
        let res = cubic_real_roots(1.0, 2.0 * p, p * p - 4.0 * r, -q * q);
        let z0 = res.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if z0 > 0.0 {
            // y^4 + p y^2 + q y + r =
            //   (y^2 - u y + (p+z0)/2 + q/(2u)) (y^2 + u y + (p+z0)/2 - q/(2u))
            let u = z0.sqrt();
            let t1 = (p + z0) / 2.0 + q / (2.0 * u);
            let t2 = (p + z0) / 2.0 - q / (2.0 * u);
            for y in quadratic_real_roots(1.0, -u, t1) {
                roots.push(newton_polish(&coeffs, y + shift));
            }
            for y in quadratic_real_roots(1.0, u, t2) {
                roots.push(newton_polish(&coeffs, y + shift));
            }
        }
    }

    // filter residual blow-ups (Newton may wander from spurious seeds)
    let tol = 1e-7 * scale;
    roots.retain(|&x| {
        x.is_finite() && {
            let px = poly_eval(&coeffs, x).abs();
            // polynomial growth makes absolute residuals meaningless far out
            px <= tol * (1.0 + x.abs().powi(4))
        }
    });
    Ok(dedupe_sorted(roots))
}

// ---------------------------------------------------------------------------
// trig-linear functions (the G_cs shape)
// ---------------------------------------------------------------------------

/// `A1 sin x + A2 cos x + x (A3 cos x + A4 sin x) + A5`.
///
/// Zeros are enumerated through the pole-normalized variant
/// `x + (A1 sin x + A2 cos x + A5) / (A3 cos x + A4 sin x)`, whose critical
/// points satisfy a quartic in `tan(x/2)`; the interval is split at the
/// poles of the denominator and a pole itself counts as a zero only when the
/// numerator vanishes there too.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigLinearFn {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
}

impl TrigLinearFn {
    pub fn new(a1: f64, a2: f64, a3: f64, a4: f64, a5: f64) -> Self {
        Self { a1, a2, a3, a4, a5 }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.a1 * x.sin()
            + self.a2 * x.cos()
            + x * (self.a3 * x.cos() + self.a4 * x.sin())
            + self.a5
    }

    fn denominator(&self, x: f64) -> f64 {
        self.a3 * x.cos() + self.a4 * x.sin()
    }

    fn normalized(&self, x: f64) -> f64 {
        x + (self.a1 * x.sin() + self.a2 * x.cos() + self.a5) / self.denominator(x)
    }

    /// Coefficients (descending) of the quartic in `tan(x/2)` whose real
    /// roots are the critical points of the pole-normalized variant.
    pub fn critical_quartic(&self) -> [f64; 5] {
        let Self { a1, a2, a3, a4, a5 } = *self;
        let cross = a1 * a3 - a2 * a4;
        [
            a3 * a3 + a4 * a5 + cross,
            -4.0 * a3 * a4 + 2.0 * a3 * a5,
            -2.0 * a3 * a3 + 4.0 * a4 * a4 + 2.0 * cross,
            4.0 * a3 * a4 + 2.0 * a3 * a5,
            a3 * a3 - a4 * a5 + cross,
        ]
    }

    /// Poles of the normalized variant inside `[lo, hi]`.
    fn poles_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let r = self.a3.hypot(self.a4);
        if r == 0.0 {
            return Vec::new();
        }
        // a3 cos x + a4 sin x = r cos(x - phi0)
        let phi0 = self.a4.atan2(self.a3);
        let base = phi0 + PI / 2.0;
        let mut poles = Vec::new();
        let mut k = ((lo - base) / PI).floor() as i64 - 1;
        loop {
            let p = base + k as f64 * PI;
            if p > hi + 1e-12 {
                break;
            }
            if p >= lo - 1e-12 {
                poles.push(p.clamp(lo, hi));
            }
            k += 1;
        }
        poles
    }

    /// Critical points of the normalized variant inside `[lo, hi]`.
    fn critical_points_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let quart = self.critical_quartic();
        let mut crit = Vec::new();
        let push_periodic = |base: f64, crit: &mut Vec<f64>| {
            let mut k = ((lo - base) / TAU).ceil() as i64 - 1;
            loop {
                let x = base + k as f64 * TAU;
                if x > hi + 1e-12 {
                    break;
                }
                if x >= lo - 1e-12 {
                    crit.push(x.clamp(lo, hi));
                }
                k += 1;
            }
        };
        if let Ok(roots) = quartic_real_roots(quart[0], quart[1], quart[2], quart[3], quart[4]) {
            for t in roots {
                push_periodic(2.0 * t.atan(), &mut crit);
            }
        }
        // tan(x/2) has no image for x = pi; it is a critical point exactly
        // when the quartic degenerates in degree
        let qscale = quart.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        if qscale == 0.0 || quart[0].abs() <= 1e-12 * qscale {
            push_periodic(PI, &mut crit);
        }
        crit.sort_by(|p, q| p.partial_cmp(q).unwrap());
        crit.dedup_by(|p, q| (*p - *q).abs() <= 1e-12);
        crit
    }

    /// All zeros on `[lo, hi]`.
    pub fn zeros_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let r = self.a3.hypot(self.a4);
        let span = hi - lo;
        if r <= 1e-14 * (self.a1.abs() + self.a2.abs() + self.a5.abs() + 1.0) {
            // pure sinusoid plus constant: A1 sin x + A2 cos x = -A5
            return self.sinusoid_zeros_in(lo, hi);
        }
        let poles = self.poles_in(lo, hi);
        let crit = self.critical_points_in(lo, hi);

        // analytic bound on |value| over the interval; the normalized
        // variant blows up near poles, the function itself never does
        let reach = lo.abs().max(hi.abs());
        let scale = (self.a1.hypot(self.a2) + self.a5.abs() + reach * r).max(1.0);
        let tol_val = VALUE_TOL * scale;

        let mut cuts: Vec<f64> = vec![lo, hi];
        cuts.extend(poles.iter().copied());
        cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
        cuts.dedup_by(|p, q| (*p - *q).abs() <= 1e-12);

        let guard = 1e-9 * span.max(1.0);
        let mut zeros = Vec::new();
        for w in cuts.windows(2) {
            let (mut a, mut b) = (w[0], w[1]);
            if poles.iter().any(|&p| (p - a).abs() <= 1e-12) {
                a += guard;
            }
            if poles.iter().any(|&p| (p - b).abs() <= 1e-12) {
                b -= guard;
            }
            if b <= a {
                continue;
            }
            let sub: Vec<f64> = crit.iter().copied().filter(|&c| c > a && c < b).collect();
            let eval = |x: f64| self.normalized(x);
            let f = SmoothFn::new(&eval, (a, b));
            for z in all_zeros(&f, &sub).zeros {
                // confirm against the unnormalized function
                if self.value(z).abs() <= tol_val.max(1e-8 * scale) {
                    zeros.push(z);
                }
            }
        }
        for &p in &poles {
            if self.value(p).abs() <= tol_val {
                zeros.push(p);
            }
        }
        zeros.sort_by(|p, q| p.partial_cmp(q).unwrap());
        let mut merged: Vec<f64> = Vec::new();
        for z in zeros {
            match merged.last() {
                Some(&last) if z - last <= 1e-9 * span.max(1.0) => {}
                _ => merged.push(z),
            }
        }
        merged
    }

    /// Zeros of `A1 sin x + A2 cos x + A5` on `[lo, hi]` (the `A3 = A4 = 0`
    /// degenerate case).
    fn sinusoid_zeros_in(&self, lo: f64, hi: f64) -> Vec<f64> {
        let r = self.a1.hypot(self.a2);
        let mut zeros = Vec::new();
        if r == 0.0 {
            return zeros; // constant: either no zeros or identically zero
        }
        // r sin(x + phi) = -A5 with phi = atan2(A2, A1)
        let phi = self.a2.atan2(self.a1);
        let ratio = -self.a5 / r;
        if ratio.abs() > 1.0 + 1e-12 {
            return zeros;
        }
        let s = ratio.clamp(-1.0, 1.0).asin();
        for base in [s - phi, PI - s - phi] {
            let mut k = ((lo - base) / TAU).ceil() as i64 - 1;
            loop {
                let x = base + k as f64 * TAU;
                if x > hi + 1e-12 {
                    break;
                }
                if x >= lo - 1e-12 {
                    zeros.push(x.clamp(lo, hi));
                }
                k += 1;
            }
        }
        zeros.sort_by(|p, q| p.partial_cmp(q).unwrap());
        zeros.dedup_by(|p, q| (*p - *q).abs() <= 1e-9);
        zeros
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bisect_linear() {
        let z = bisect(|t| t - 1.0, 0.0, 2.0).unwrap();
        assert_abs_diff_eq!(z, 1.0, epsilon = 1e-11);
    }

    #[test]
    fn bisect_cosine() {
        let z = bisect(f64::cos, 0.0, PI).unwrap();
        assert_abs_diff_eq!(z, PI / 2.0, epsilon = 1e-11);
    }

    #[test]
    fn bisect_rejects_non_bracket() {
        assert_eq!(bisect(|t| t * t + 1.0, -1.0, 1.0), Err(RootError::NoBracket));
    }

    #[test]
    fn all_zeros_sine() {
        let eval = |t: f64| t.sin();
        let f = SmoothFn::new(&eval, (0.0, TAU));
        let zs = all_zeros(&f, &[PI / 2.0, 3.0 * PI / 2.0]);
        assert_eq!(zs.zeros.len(), 3);
        assert_abs_diff_eq!(zs.zeros[0], 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(zs.zeros[1], PI, epsilon = 1e-9);
        assert_abs_diff_eq!(zs.zeros[2], TAU, epsilon = 1e-9);
    }

    #[test]
    fn all_zeros_none() {
        let eval = |t: f64| t * t + 1.0;
        let f = SmoothFn::new(&eval, (-1.0, 1.0));
        assert!(all_zeros(&f, &[0.0]).zeros.is_empty());
    }

    #[test]
    fn all_zeros_tangential() {
        // double zero at 1 sits on the scaffold, not in a bisection bracket
        let eval = |t: f64| (t - 1.0) * (t - 1.0);
        let f = SmoothFn::new(&eval, (0.0, 2.0));
        let zs = all_zeros(&f, &[1.0]);
        assert_eq!(zs.zeros.len(), 1);
        assert_abs_diff_eq!(zs.zeros[0], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn quartic_plain() {
        let r = quartic_real_roots(1.0, 0.0, 0.0, 0.0, -1.0).unwrap();
        assert_eq!(r.len(), 2);
        assert_abs_diff_eq!(r[0], -1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r[1], 1.0, epsilon = 1e-10);
    }

    #[test]
    fn quartic_double_root_with_complex_pair() {
        // (x-2)^2 (x^2+1) = x^4 - 4x^3 + 5x^2 - 4x + 4
        let r = quartic_real_roots(1.0, -4.0, 5.0, -4.0, 4.0).unwrap();
        assert_eq!(r.len(), 1);
        assert_abs_diff_eq!(r[0], 2.0, epsilon = 1e-7);
    }

    #[test]
    fn quartic_degree_degradation() {
        let r = quartic_real_roots(0.0, 1.0, 0.0, -4.0, 0.0).unwrap(); // x^3 - 4x
        assert_eq!(r.len(), 3);
        assert_abs_diff_eq!(r[0], -2.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r[1], 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r[2], 2.0, epsilon = 1e-10);
        assert_eq!(
            quartic_real_roots(0.0, 0.0, 0.0, 0.0, 0.0),
            Err(RootError::ZeroPolynomial)
        );
    }

    #[test]
    fn chain_sin_cos() {
        let g0 = |t: f64| t.sin();
        let g1 = |t: f64| t.cos();
        let chain: [&dyn Fn(f64) -> f64; 2] = [&g0, &g1];
        // zeros of cos' = -sin on [0, 2pi]: {0, pi, 2pi}
        let zs = derivative_chain_zeros(&chain, (0.0, TAU), &[0.0, PI, TAU]).unwrap();
        assert_eq!(zs.zeros.len(), 3);
        assert_abs_diff_eq!(zs.zeros[1], PI, epsilon = 1e-9);
    }

    #[test]
    fn chain_polynomial_against_known_roots() {
        // p(x) = (x+3)(x+1)x(x-1.5)(x-4) expanded; p'' roots supplied by the
        // quartic solver applied to the exact second derivative.
        let roots = [-3.0, -1.0, 0.0, 1.5, 4.0];
        let p = |x: f64| roots.iter().fold(1.0, |acc, r| acc * (x - r));
        // coefficients of p, then derivatives
        let mut coeffs = vec![1.0];
        for r in roots {
            let mut next = vec![0.0; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c * r;
            }
            coeffs = next;
        }
        let deriv = |c: &[f64]| -> Vec<f64> {
            let n = c.len() - 1;
            c.iter()
                .take(n)
                .enumerate()
                .map(|(i, &ci)| ci * (n - i) as f64)
                .collect()
        };
        let d1 = deriv(&coeffs);
        let d2 = deriv(&d1);
        let p1 = {
            let d1 = d1.clone();
            move |x: f64| poly_eval(&d1, x)
        };
        let chain: [&dyn Fn(f64) -> f64; 2] = [&p, &p1];
        let base = quartic_real_roots(0.0, d2[0], d2[1], d2[2], d2[3]).unwrap();
        let zs = derivative_chain_zeros(&chain, (-5.0, 6.0), &base).unwrap();
        assert_eq!(zs.zeros.len(), roots.len());
        for (z, r) in zs.zeros.iter().zip(roots.iter()) {
            assert_abs_diff_eq!(*z, *r, epsilon = 1e-9);
        }
    }

    #[test]
    fn trig_linear_zeros_match_dense_scan() {
        let f = TrigLinearFn::new(-2.55, 4.55, 0.55, 0.55, 4.3);
        let zs = f.zeros_in(0.0, TAU);
        // dense verification
        let mut dense = Vec::new();
        let n = 200_000;
        let mut prev = f.value(0.0);
        for i in 1..=n {
            let x = TAU * i as f64 / n as f64;
            let cur = f.value(x);
            if prev * cur < 0.0 {
                dense.push(bisect(|t| f.value(t), TAU * (i - 1) as f64 / n as f64, x).unwrap());
            }
            prev = cur;
        }
        assert_eq!(zs.len(), dense.len());
        for (a, b) in zs.iter().zip(dense.iter()) {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-8);
        }
        // frozen leading zero for the Case-A shaped coefficients
        assert_abs_diff_eq!(zs[0], 2.154586956441, epsilon = 1e-9);
    }

    #[test]
    fn trig_linear_sinusoid_branch() {
        let f = TrigLinearFn::new(1.0, 0.0, 0.0, 0.0, -0.5);
        let zs = f.zeros_in(0.0, TAU);
        assert_eq!(zs.len(), 2);
        assert_abs_diff_eq!(zs[0], PI / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(zs[1], 5.0 * PI / 6.0, epsilon = 1e-12);
    }
}
