//! Monte Carlo hitting-time estimation.
//!
//! Trials run in parallel on independent RNG substreams and are aggregated
//! through exact integer sums, so the estimate is bit-identical no matter
//! how rayon schedules the work.

use num::BigRational;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::solve::hitting_times_to_absorption;
use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedSet};
use crate::report::SolveValue;
use crate::rng::substream;
use crate::scalar::to_f64;
use crate::stochastic::{Distribution, StochasticMatrix};

/// A trial exceeding `MC_STEP_CAP_FACTOR * n^2` steps aborts the run:
/// absorption on the cycle takes Θ(n²) expected steps, so 100× that signals
/// a bug rather than bad luck.
pub const MC_STEP_CAP_FACTOR: u64 = 100;

/// Exact instances are solved over rationals up to this dimension, floating
/// point above it.
const EXACT_SOLVE_LIMIT: usize = 256;

/// Hitting time of a marked set: exact value (linear solve) side by side
/// with the Monte Carlo estimate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HittingReport {
    /// Exact expected steps ("p/q" for instances solved over rationals).
    pub exact_value: SolveValue,
    pub exact_value_float: f64,
    pub mc_estimate: f64,
    pub mc_stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

/// Runs `trials` independent walks, each from a uniformly random start
/// vertex, stepping uniformly over neighbors until a marked vertex is hit.
pub fn simulate_hitting_time(
    g: &Graph,
    marked: &MarkedSet,
    trials: u64,
    seed: u64,
) -> Result<HittingReport> {
    if marked.is_empty() {
        return Err(Error::EmptyMarkedSet);
    }
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let n = g.n();
    let cap = MC_STEP_CAP_FACTOR * (n as u64) * (n as u64);

    // integer sums are associative, so the parallel reduction is exact and
    // schedule-independent
    let (sum, sum_sq) = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<(u128, u128)> {
            let steps = run_trial(g, marked, cap, seed, trial)?;
            Ok((steps as u128, (steps as u128) * (steps as u128)))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;

    let t = trials as f64;
    let mean = sum as f64 / t;
    let stderr = if trials > 1 {
        let var = (sum_sq as f64 - (sum as f64) * (sum as f64) / t) / (t - 1.0);
        (var.max(0.0) / t).sqrt()
    } else {
        0.0
    };

    let (exact_value, exact_value_float) = exact_hitting_time(g, marked)?;
    Ok(HittingReport {
        exact_value,
        exact_value_float,
        mc_estimate: mean,
        mc_stderr: stderr,
        trials,
        seed,
    })
}

fn run_trial(g: &Graph, marked: &MarkedSet, cap: u64, seed: u64, trial: u64) -> Result<u64> {
    let mut rng = substream(seed, trial);
    let mut v = rng.random_range(0..g.n());
    let mut steps = 0u64;
    while !marked.contains(v) {
        if steps >= cap {
            return Err(Error::StepCapExceeded { trial, cap });
        }
        let nb = g.neighbors(v);
        v = nb[rng.random_range(0..nb.len())];
        steps += 1;
    }
    Ok(steps)
}

/// Uniform-start hitting time via the linear solve: exact rationals up to
/// 256 vertices, `f64` beyond.
pub fn exact_hitting_time(g: &Graph, marked: &MarkedSet) -> Result<(SolveValue, f64)> {
    let n = g.n();
    if n <= EXACT_SOLVE_LIMIT {
        let pp = StochasticMatrix::<BigRational>::transition(g).absorbing(marked)?;
        let times = hitting_times_to_absorption(&pp, marked)?;
        let sum = times
            .into_iter()
            .fold(BigRational::from_integer(0.into()), |acc, t| acc + t);
        let ht = sum / BigRational::from_integer(n.into());
        let f = to_f64(&ht);
        Ok((SolveValue::Exact(ht.into()), f))
    } else {
        let pp = StochasticMatrix::<f64>::transition(g).absorbing(marked)?;
        let ht = crate::classical::hitting_time_linear_solve(
            &pp,
            marked,
            &Distribution::uniform(n),
        )?;
        Ok((SolveValue::Approx(ht), ht))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_marked_means_zero_steps() {
        let g = Graph::cycle(6).unwrap();
        let r = simulate_hitting_time(&g, &MarkedSet::full(6), 1000, 1).unwrap();
        assert_eq!(r.mc_estimate, 0.0);
        assert_eq!(r.mc_stderr, 0.0);
        assert_eq!(r.exact_value_float, 0.0);
    }

    #[test]
    fn cycle_six_estimate_matches_exact() {
        let g = Graph::cycle(6).unwrap();
        let m = MarkedSet::new([0], 6).unwrap();
        let r = simulate_hitting_time(&g, &m, 100_000, 42).unwrap();
        assert_eq!(r.exact_value_float, 35.0 / 6.0);
        assert!(
            (r.mc_estimate - r.exact_value_float).abs() <= 3.0 * r.mc_stderr,
            "estimate {} exact {} stderr {}",
            r.mc_estimate,
            r.exact_value_float,
            r.mc_stderr
        );
    }

    #[test]
    fn clustered_estimate_matches_exact() {
        let g = Graph::cycle(9).unwrap();
        let m = MarkedSet::new([0, 1, 2], 9).unwrap();
        let r = simulate_hitting_time(&g, &m, 100_000, 7).unwrap();
        assert_eq!(r.exact_value_float, 56.0 / 9.0);
        assert!((r.mc_estimate - r.exact_value_float).abs() <= 3.0 * r.mc_stderr);
    }

    #[test]
    fn reproducible_from_seed() {
        let g = Graph::cycle(12).unwrap();
        let m = MarkedSet::new([3], 12).unwrap();
        let a = simulate_hitting_time(&g, &m, 5000, 99).unwrap();
        let b = simulate_hitting_time(&g, &m, 5000, 99).unwrap();
        assert_eq!(a, b);
        let c = simulate_hitting_time(&g, &m, 5000, 100).unwrap();
        assert_ne!(a.mc_estimate, c.mc_estimate);
    }

    #[test]
    fn unreachable_target_hits_the_cap() {
        let g = Graph::from_adjacency(vec![
            vec![1, 2],
            vec![0, 2],
            vec![0, 1],
            vec![4, 5],
            vec![3, 5],
            vec![3, 4],
        ])
        .unwrap();
        let m = MarkedSet::new([0], 6).unwrap();
        let res = simulate_hitting_time(&g, &m, 64, 5);
        assert!(matches!(res, Err(Error::StepCapExceeded { .. })));
    }

    #[test]
    fn empty_marked_set_rejected() {
        let g = Graph::cycle(6).unwrap();
        assert!(matches!(
            simulate_hitting_time(&g, &MarkedSet::empty(6), 10, 0),
            Err(Error::EmptyMarkedSet)
        ));
    }

    /// Statistical contract: the 3-sigma interval covers the exact value in
    /// at least 99 of 100 seeded runs.
    #[test]
    fn three_sigma_coverage_over_seeds() {
        let g = Graph::cycle(6).unwrap();
        let m = MarkedSet::new([0], 6).unwrap();
        let exact = 35.0 / 6.0;
        let hits = (0..100u64)
            .filter(|&seed| {
                let r = simulate_hitting_time(&g, &m, 2000, seed).unwrap();
                (r.mc_estimate - exact).abs() <= 3.0 * r.mc_stderr
            })
            .count();
        assert!(hits >= 99, "only {hits}/100 runs covered the exact value");
    }
}
