//! Cross-module checks through the public API, including the Monte Carlo
//! oracles behind the closed-form step expectations.

use num::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use szwalk_core::stochastic::Distribution;
use szwalk_core::{
    hitting_time_linear_solve, rng::substream, simulate_hitting_time, verify_exceptional,
    verify_grid_reduction, Graph, GraphConfig, MarkedSet, MatrixExact, Walk64,
};

/// Ring distance on an `l`-cycle.
fn distance(l: usize, v: usize) -> usize {
    v.min(l - v)
}

/// Monte Carlo oracle for the one-step-closer expectation: walk from
/// distance `i` until the distance to vertex 0 drops below `i`.
fn mc_one_step_closer(l: usize, i: usize, trials: u64, seed: u64) -> (f64, f64) {
    let mut sum = 0u128;
    let mut sum_sq = 0u128;
    for trial in 0..trials {
        let mut rng = substream(seed, trial);
        let mut v = i; // start at distance i
        let mut steps = 0u64;
        while distance(l, v) >= i {
            v = if rng.random_bool(0.5) { (v + 1) % l } else { (v + l - 1) % l };
            steps += 1;
        }
        sum += steps as u128;
        sum_sq += (steps as u128) * (steps as u128);
    }
    let t = trials as f64;
    let mean = sum as f64 / t;
    let var = (sum_sq as f64 - (sum as f64).powi(2) / t) / (t - 1.0);
    (mean, (var / t).sqrt())
}

#[test]
fn one_step_closer_expectation_matches_monte_carlo() {
    // closed form says 10 - 2*3 + 1 = 5 on the 10-cycle
    let (mean, stderr) = mc_one_step_closer(10, 3, 200_000, 8);
    let exact: f64 = szwalk_core::h_step_expectation(10, 3).unwrap();
    assert_eq!(exact, 5.0);
    assert!((mean - exact).abs() <= 3.0 * stderr, "{mean} ± {stderr}");
}

#[test]
fn absorption_from_antipode_matches_monte_carlo() {
    // H_4 = 4*(8-4) = 16 on the 8-cycle, estimated from the antipode
    let l = 8usize;
    let mut sum = 0u128;
    let mut sum_sq = 0u128;
    let trials = 200_000u64;
    for trial in 0..trials {
        let mut rng = substream(5, trial);
        let mut v = 4usize;
        let mut steps = 0u64;
        while v != 0 {
            v = if rng.random_bool(0.5) { (v + 1) % l } else { (v + l - 1) % l };
            steps += 1;
        }
        sum += steps as u128;
        sum_sq += (steps as u128) * (steps as u128);
    }
    let t = trials as f64;
    let mean = sum as f64 / t;
    let stderr =
        (((sum_sq as f64 - (sum as f64).powi(2) / t) / (t - 1.0)) / t).sqrt();
    let exact: f64 = szwalk_core::hitting_from_distance(8, 4).unwrap();
    assert_eq!(exact, 16.0);
    assert!((mean - exact).abs() <= 3.0 * stderr, "{mean} ± {stderr}");
}

#[test]
fn spread_marked_set_solve_matches_monte_carlo() {
    // the {1,2,4} (1-based) configuration: marked-adjacent-marked,
    // marked-adjacent-unmarked and unmarked-adjacent-unmarked all occur
    let g = Graph::cycle(6).unwrap();
    let m = MarkedSet::from_one_based([1, 2, 4], 6).unwrap();
    let pp = MatrixExact::transition(&g).absorbing(&m).unwrap();
    let solve =
        hitting_time_linear_solve(&pp, &m, &Distribution::<BigRational>::uniform(6)).unwrap();
    let r = simulate_hitting_time(&g, &m, 400_000, 12).unwrap();
    assert_eq!(r.exact_value_float, solve.to_f64().unwrap());
    assert!((r.mc_estimate - r.exact_value_float).abs() <= 3.0 * r.mc_stderr);
}

#[test]
fn torus_diagonals_are_exceptional_for_small_sides() {
    for side in [3usize, 4, 5] {
        let g = Graph::torus_grid(side).unwrap();
        let m = MarkedSet::diagonal(side).unwrap();
        let r = verify_exceptional(&g, &m, 100, 1e-10).unwrap();
        assert!(r.verdict, "side {side}: {r:?}");
        let gr = verify_grid_reduction(side, 50, 1e-10).unwrap();
        assert!(gr.verdict, "side {side}: {gr:?}");
    }
}

#[test]
fn torus_diagonal_period_equals_quotient_cycle_period() {
    // the diagonal-marked torus evolves exactly like the single-marked
    // quotient cycle, so their periods coincide
    let side = 5usize;
    let torus = Walk64::new(
        &Graph::torus_grid(side).unwrap(),
        &MarkedSet::diagonal(side).unwrap(),
    )
    .unwrap();
    let quotient = Walk64::new(
        &Graph::cycle(side).unwrap(),
        &MarkedSet::new([0], side).unwrap(),
    )
    .unwrap();
    let qt = quotient.detect_period(64, 1e-10).expect("quotient period");
    assert_eq!(torus.detect_period(64, 1e-10), Some(qt));
    assert_eq!(qt, 5);
}

#[test]
fn config_pipeline_end_to_end() {
    let cfg = GraphConfig::from_json(
        r#"{"graph": {"kind": "cycle", "n": 9}, "marked": [1, 2, 3]}"#,
    )
    .unwrap();
    let (g, m) = cfg.build().unwrap();
    let report = simulate_hitting_time(&g, &m, 50_000, 3).unwrap();
    assert_eq!(report.exact_value_float, 56.0 / 9.0);
    assert!((report.mc_estimate - report.exact_value_float).abs() <= 3.0 * report.mc_stderr);

    // reports round-trip through JSON losslessly
    let json = serde_json::to_string(&report).unwrap();
    let back: szwalk_core::HittingReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}

#[test]
fn exceptional_report_round_trips() {
    let g = Graph::cycle(6).unwrap();
    let m = MarkedSet::new([0, 1, 3], 6).unwrap();
    let r = verify_exceptional(&g, &m, 8, 1e-10).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    let back: szwalk_core::ExceptionalReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
}
