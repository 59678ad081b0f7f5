//! Batch solving over independent instances.
//!
//! With the `parallel` feature (default) [`solve_batch`] fans instances out
//! over the rayon pool; [`solve_batch_seq`] is always sequential and exists
//! so the two can be compared. Output order matches input order either way.

use crate::error::SolveError;
use crate::geometry::TargetMotion;
use crate::mtip::{solve_mtip, InterceptSolution};

/// One batch entry: a target motion plus its turning radius.
pub type Instance = (TargetMotion, f64);

/// Solves every instance sequentially.
pub fn solve_batch_seq(instances: &[Instance]) -> Vec<Result<InterceptSolution, SolveError>> {
    instances.iter().map(|(m, rho)| solve_mtip(m, *rho)).collect()
}

/// Solves every instance, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn solve_batch(instances: &[Instance]) -> Vec<Result<InterceptSolution, SolveError>> {
    use rayon::prelude::*;
    instances
        .par_iter()
        .map(|(m, rho)| solve_mtip(m, *rho))
        .collect()
}

/// Solves every instance, in parallel when the `parallel` feature is on.
#[cfg(not(feature = "parallel"))]
pub fn solve_batch(instances: &[Instance]) -> Vec<Result<InterceptSolution, SolveError>> {
    solve_batch_seq(instances)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    #[test]
    fn batch_matches_sequential_in_order() {
        let instances: Vec<Instance> = vec![
            (
                TargetMotion::new(Point::new(5.0, 2.0), Point::new(0.55, -0.55)).unwrap(),
                1.0,
            ),
            (
                TargetMotion::new(Point::new(1.2, 0.0), Point::new(-0.1, -0.1)).unwrap(),
                1.0,
            ),
            (
                TargetMotion::new(Point::new(-3.0, 0.8), Point::new(0.15, 0.0)).unwrap(),
                1.0,
            ),
        ];
        let par = solve_batch(&instances);
        let seq = solve_batch_seq(&instances);
        assert_eq!(par.len(), seq.len());
        for (a, b) in par.iter().zip(seq.iter()) {
            let (a, b) = (a.as_ref().unwrap(), b.as_ref().unwrap());
            assert_eq!(a.t_m.to_bits(), b.t_m.to_bits());
        }
    }
}
