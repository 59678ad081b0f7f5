//! Scratch diagnostics for the zero-enumeration engine (not part of the
//! public surface).

use dubins_intercept::geometry::{Point, TargetMotion};
use dubins_intercept::mtip::{cc_coefficients, gcc_chain};
use dubins_intercept::rootfinding::TrigLinearFn;

fn main() {
    let m = TargetMotion::new(Point::new(1.2, 0.0), Point::new(-0.1, -0.1)).unwrap();
    let coeffs = cc_coefficients(&m, 1.0);
    println!("B = {:?}", coeffs.b);
    let chain = gcc_chain(&coeffs, 4.0 * std::f64::consts::PI);
    let g5 = chain.fifth_derivative();
    println!(
        "g5 A = ({}, {}, {}, {}, {})",
        g5.a1, g5.a2, g5.a3, g5.a4, g5.a5
    );
    let base = g5.zeros_in(0.0, 4.0 * std::f64::consts::PI);
    println!("g5 zeros: {base:?}");
    for z in &base {
        println!("  g5({z}) = {}", g5.value(*z));
    }
    let mut crit = base;
    for level in (0..=4).rev() {
        let f = |e: f64| chain.value(level, e);
        let sf = dubins_intercept::rootfinding::SmoothFn::new(&f, (0.0, 4.0 * std::f64::consts::PI));
        let zs = dubins_intercept::rootfinding::all_zeros(&sf, &crit);
        println!("level {level} zeros: {:?}", zs.zeros);
        for z in &zs.zeros {
            println!("  G{level}({z}) = {}", chain.value(level, *z));
        }
        crit = zs.zeros.clone();
    }

    // near-stationary CS case
    let f = TrigLinearFn::new(-5.001, -1.0, 1e-3, 0.0, 1.005);
    println!("\ncs zeros: {:?}", f.zeros_in(0.0, std::f64::consts::TAU));
    println!("quartic: {:?}", f.critical_quartic());

    // mirrored Case C coefficients
    let f = TrigLinearFn::new(-0.65, 2.0, -0.15, 0.0, 0.88);
    let zs = f.zeros_in(0.0, std::f64::consts::TAU);
    println!("\ncase-c-mirror zeros: {zs:?}");
    for z in &zs { println!("  G({z}) = {}", f.value(*z)); }
    println!("quartic: {:?}", f.critical_quartic());
    // dense reference
    let n = 400000;
    let mut prev = f.value(0.0);
    for i in 1..=n {
        let x = std::f64::consts::TAU * i as f64 / n as f64;
        let cur = f.value(x);
        if prev * cur < 0.0 { println!("  dense sign change near {x}"); }
        prev = cur;
    }
}

#[allow(dead_code)]
fn case_c_probe() {}
