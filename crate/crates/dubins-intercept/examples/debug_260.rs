
//! Reproduce randomized-suite instance #260.
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use dubins_intercept::geometry::{Point, TargetMotion};
use dubins_intercept::mtip::{solve_mtip, solve_rs_family, solve_cc_family, cs_coefficients, cs_coefficients_direct, cc_coefficients, gcc_chain};
use dubins_intercept::oracle::{mtip_oracle, OracleConfig};
use dubins_intercept::rdp::rdp_length;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut instances = Vec::new();
    while instances.len() < 500 {
        let p0 = Point::new(rng.gen_range(-6.0..6.0), rng.gen_range(-6.0..6.0));
        let ang = rng.gen_range(0.0..std::f64::consts::TAU);
        let speed = rng.gen_range(0.0..0.8);
        let v = Point::new(speed * ang.cos(), speed * ang.sin());
        if p0.norm() > 1e-2 {
            instances.push(TargetMotion::new(p0, v).unwrap());
        }
    }
    let m = instances[260];
    println!("instance: p0 = {:?}, v = {:?}", m.p0(), m.velocity());
    match solve_mtip(&m, 1.0) {
        Ok(sol) => println!("solved t_m = {}", sol.t_m),
        Err(e) => println!("solve error: {e}"),
    }
    let cfg = OracleConfig::for_instance(&m, 1.0);
    println!("oracle: {:?}", mtip_oracle(&m, 1.0, &cfg));

    for (label, inst) in [("orig", m), ("mirror", m.mirror_x())] {
        println!("--- {label} ---");
        for c in solve_rs_family(&inst, 1.0) {
            println!("  RS cand t = {} fam {:?} term ({}, {}) res {:.2e}", c.t, c.family, c.terminal.x, c.terminal.y, c.residual);
        }
        for c in solve_cc_family(&inst, 1.0) {
            println!("  CC cand t = {} fam {:?} term ({}, {}) res {:.2e}", c.t, c.family, c.terminal.x, c.terminal.y, c.residual);
        }
        let cs = cs_coefficients(&inst, 1.0).unwrap_or_else(|_| cs_coefficients_direct(&inst, 1.0));
        let f = cs.as_trig_linear();
        println!("  cs zeros: {:?}", f.zeros_in(0.0, std::f64::consts::TAU));
        let chain = gcc_chain(&cc_coefficients(&inst, 1.0), 4.0*std::f64::consts::PI);
        println!("  cc zeros: {:?}", chain.gcc_zeros());
    }
    // what does the oracle think the terminal/region is?
    if let Ok(t) = mtip_oracle(&m, 1.0, &cfg) {
        let p = m.position_at(t).unwrap();
        println!("oracle terminal ({}, {}), F = {}", p.x, p.y, rdp_length(p, 1.0));
    }
}
