//! Cesàro (time-averaged) mixing time.
//!
//! The simple walk on an even cycle is periodic and never converges
//! pointwise, so mixing is measured on the running average
//! `(1/(t+1)) Σ_{s<=t} dist_s`, which converges for every irreducible chain.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stochastic::{Distribution, StochasticMatrix};

/// Iteration cap: `10^6 * n` steps.
const MIXING_CAP_FACTOR: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MixingReport {
    pub epsilon: f64,
    /// First `t` at which the Cesàro average is within `epsilon` of uniform.
    pub time_steps: u64,
    pub final_tv_distance: f64,
}

/// First `t` at which the Cesàro-averaged occupancy of a walk started at
/// `start_vertex` is within total-variation `epsilon` of uniform.
pub fn cesaro_mixing_time(
    p: &StochasticMatrix<f64>,
    start_vertex: usize,
    epsilon: f64,
) -> Result<MixingReport> {
    if !(0.0..1.0).contains(&epsilon) || epsilon <= 0.0 {
        return Err(Error::Domain(format!("epsilon {epsilon} outside (0, 1)")));
    }
    if !p.is_irreducible() {
        return Err(Error::NotIrreducible(
            "the chain has absorbing or unreachable states; the Cesàro average cannot reach uniform"
                .into(),
        ));
    }
    let n = p.n();
    let uniform = Distribution::<f64>::uniform(n);
    let cap = MIXING_CAP_FACTOR * n as u64;

    let mut dist = Distribution::<f64>::point_mass(start_vertex, n)?;
    let mut avg = dist.clone();
    let mut t = 0u64;
    loop {
        let tv = avg.tv_distance(&uniform);
        if tv <= epsilon {
            return Ok(MixingReport {
                epsilon,
                time_steps: t,
                final_tv_distance: tv,
            });
        }
        if t >= cap {
            return Err(Error::ConvergenceCapExceeded { cap });
        }
        dist = p.propagate(&dist);
        t += 1;
        // avg_t = (t * avg_{t-1} + dist_t) / (t + 1)
        let w = t as f64;
        let probs = avg
            .probs()
            .iter()
            .zip(dist.probs())
            .map(|(a, d)| (a * w + d) / (w + 1.0))
            .collect();
        avg = Distribution::from_raw(probs);
        debug_assert!(avg.is_valid(1e-12));
    }
}
