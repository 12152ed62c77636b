//! Classical random-walk machinery: closed-form hitting times on cycles, an
//! exact linear-system solver for arbitrary absorbing chains, Monte Carlo
//! estimation, and Cesàro mixing times.

mod exact;
mod mixing;
mod monte_carlo;
mod solve;

pub use exact::{
    clustered_hitting_time_exact, h_step_expectation, hitting_from_distance,
    hitting_time_exact_cycle, oresme_partial_sum,
};
pub use mixing::{cesaro_mixing_time, MixingReport};
pub use monte_carlo::{simulate_hitting_time, HittingReport, MC_STEP_CAP_FACTOR};
pub use solve::{hitting_time_linear_solve, hitting_times_to_absorption};
