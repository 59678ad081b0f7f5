//! Property tests for the structural invariants, plus the companion-matrix
//! eigenvalue oracle for the quartic solver.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use proptest::prelude::*;

use dubins_intercept::elongation::elongation;
use dubins_intercept::geometry::{
    terminal, Configuration, DubinsPath, Point, Segment, SegmentKind,
};
use dubins_intercept::oracle::dense_zero_scan;
use dubins_intercept::rdp::{classify_region, rdp_length, solve_rdp, RegionTag};
use dubins_intercept::rootfinding::{all_zeros, quartic_real_roots, SmoothFn, TrigLinearFn};

fn segment_strategy() -> impl Strategy<Value = Segment> {
    (0usize..3, 0.0..TAU).prop_map(|(k, m)| {
        let kind = match k {
            0 => SegmentKind::LeftArc,
            1 => SegmentKind::RightArc,
            _ => SegmentKind::Line,
        };
        Segment::new(kind, m).unwrap()
    })
}

proptest! {
    #[test]
    fn rollout_mirror_reflects_terminal(
        first in segment_strategy(),
        second in segment_strategy(),
        rho in 0.25f64..3.0,
    ) {
        prop_assume!(first.kind != second.kind);
        let path = DubinsPath::new(Configuration::canonical(), rho, vec![first, second]).unwrap();
        let end = terminal(&path);
        let end_m = terminal(&path.mirror_x());
        prop_assert!((end_m.x + end.x).abs() <= 1e-9 * rho.max(1.0));
        prop_assert!((end_m.y - end.y).abs() <= 1e-9 * rho.max(1.0));
    }

    #[test]
    fn rdp_symmetry_and_lower_bound(x in -6.0f64..6.0, y in -6.0f64..6.0) {
        let p = Point::new(x, y);
        let a = solve_rdp(p, 1.0);
        let b = solve_rdp(p.mirror_x(), 1.0);
        prop_assert!((a.length - b.length).abs() <= 1e-9);
        prop_assert_eq!(a.family.mirror_x(), b.family);
        prop_assert!(a.length >= p.norm() - 1e-9);
        // the returned path really ends at p
        if !a.path.segments().is_empty() {
            prop_assert!(terminal(&a.path).position().distance(p) <= 1e-9);
        }
    }

    #[test]
    fn elongation_brackets_f(x in 0.01f64..1.95, y in 0.05f64..2.8) {
        let p = Point::new(x, y);
        prop_assume!(classify_region(p, 1.0).tag == RegionTag::R3);
        // keep away from the region boundary where the pair degenerates
        let s = (p.x + 1.0).hypot(p.y);
        prop_assume!(s < 2.99 && s > 1.01);
        let e = elongation(p, 1.0).unwrap();
        let f = rdp_length(p, 1.0);
        prop_assert!(f < e.l_minus + 1e-9);
        prop_assert!(e.l_minus < e.l_plus + 1e-9);
        prop_assert!(e.alpha_minus <= e.xi + 1e-12 && e.xi <= e.alpha_plus + 1e-12);
    }

    #[test]
    fn quartic_matches_companion_eigenvalues(
        c4 in -3.0f64..3.0,
        c3 in -3.0f64..3.0,
        c2 in -3.0f64..3.0,
        c1 in -3.0f64..3.0,
        c0 in -3.0f64..3.0,
    ) {
        prop_assume!(c4.abs() > 1e-3);
        let mine = quartic_real_roots(c4, c3, c2, c1, c0).unwrap();
        // companion matrix of the monic polynomial
        let (a, b, c, d) = (c3 / c4, c2 / c4, c1 / c4, c0 / c4);
        let comp = DMatrix::<f64>::from_row_slice(4, 4, &[
            -a, -b, -c, -d,
            1.0, 0.0, 0.0, 0.0,
            0.0, 1.0, 0.0, 0.0,
            0.0, 0.0, 1.0, 0.0,
        ]);
        let eig = comp.complex_eigenvalues();
        let mut reference: Vec<f64> = eig
            .iter()
            .filter(|z| z.im.abs() <= 1e-8 * (1.0 + z.re.abs()))
            .map(|z| z.re)
            .collect();
        reference.sort_by(|p, q| p.partial_cmp(q).unwrap());
        reference.dedup_by(|p, q| (*p - *q).abs() <= 1e-6 * (1.0 + p.abs()));
        // compare as sets with a tolerance wide enough for the eigensolver's
        // own error on near-multiple roots
        prop_assert_eq!(mine.len(), reference.len());
        for (m, r) in mine.iter().zip(reference.iter()) {
            prop_assert!((m - r).abs() <= 1e-6 * (1.0 + r.abs()),
                "root {} vs eigenvalue {}", m, r);
        }
    }

    #[test]
    fn trig_linear_determinism(
        a1 in -5.0f64..5.0,
        a2 in -5.0f64..5.0,
        a3 in -5.0f64..5.0,
        a4 in -5.0f64..5.0,
        a5 in -5.0f64..5.0,
    ) {
        prop_assume!(a3.hypot(a4) > 1e-3);
        let f = TrigLinearFn::new(a1, a2, a3, a4, a5);
        let z1 = f.zeros_in(0.0, TAU);
        let z2 = f.zeros_in(0.0, TAU);
        prop_assert_eq!(z1.len(), z2.len());
        for (p, q) in z1.iter().zip(z2.iter()) {
            prop_assert_eq!(p.to_bits(), q.to_bits());
        }
    }
}

/// Lemma-style dichotomy: between adjacent critical points with equal signs
/// there is no sign change, checked against a dense scan.
#[test]
fn scaffold_dichotomy_on_sine_family() {
    for k in 1..6 {
        let w = k as f64;
        let eval = move |t: f64| (w * t).sin() + 0.3 * t - 0.8;
        // critical points: cos(w t) = -0.3 / w
        let mut crit = Vec::new();
        let ratio: f64 = -0.3 / w;
        if ratio.abs() <= 1.0 {
            let base = ratio.acos();
            let mut m = 0;
            loop {
                let t1 = (base + TAU * m as f64) / w;
                let t2 = (-base + TAU * (m + 1) as f64) / w;
                if t1 > 10.0 && t2 > 10.0 {
                    break;
                }
                for t in [t1, t2] {
                    if (0.0..=10.0).contains(&t) {
                        crit.push(t);
                    }
                }
                m += 1;
            }
            crit.sort_by(|p, q| p.partial_cmp(q).unwrap());
        }
        let f = SmoothFn::new(&eval, (0.0, 10.0));
        let found = all_zeros(&f, &crit).zeros;
        let dense = dense_zero_scan(&f, 100_000);
        assert_eq!(found.len(), dense.len(), "w = {w}");
        for (a, b) in found.iter().zip(dense.iter()) {
            assert!((a - b).abs() <= 1e-7, "w = {w}: {a} vs {b}");
        }
    }
}
