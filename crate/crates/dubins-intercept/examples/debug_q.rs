//! Quartic edge-case probe.
use dubins_intercept::rootfinding::{cubic_real_roots, quartic_real_roots};

fn main() {
    let q = [
        0.0013996395140664641,
        -0.8159949278789458,
        -0.8149393289608944,
        -0.9696023286940507,
        -0.09225788723818223,
    ];
    println!("{:?}", quartic_real_roots(q[0], q[1], q[2], q[3], q[4]));
    // trace the internals
    let (c4, c3, c2, c1, c0) = (q[0], q[1], q[2], q[3], q[4]);
    let a = c3 / c4;
    let b = c2 / c4;
    let c = c1 / c4;
    let d = c0 / c4;
    let p = b - 3.0 * a * a / 8.0;
    let qq = c - a * b / 2.0 + a * a * a / 8.0;
    let r = d - a * c / 4.0 + a * a * b / 16.0 - 3.0 * a * a * a * a / 256.0;
    println!("p {p} q {qq} r {r} shift {}", -a / 4.0);
    let res = cubic_real_roots(1.0, 2.0 * p, p * p - 4.0 * r, -qq * qq);
    println!("resolvent roots: {res:?}");
}
