//! Szegedy quantum walk simulator on cycles and torus grids.
//!
//! The walk runs on the directed-edge basis of the bipartite double cover,
//! with both reflections applied as per-vertex inversion about the average
//! amplitude and the marked-vertex action as the sign-flip oracle. Alongside
//! the dense evolver the crate provides:
//!
//! - an exact ±1 sign tracker for cycles, where the walk provably evolves by
//!   sign flips only and the measured distribution stays uniform forever;
//! - classical hitting times (closed forms, an exact rational linear solve,
//!   and seeded parallel Monte Carlo) and Cesàro mixing times;
//! - experiment reports: exceptional-configuration verification, sampling
//!   cost, classical/quantum cost separation, and the torus-diagonal
//!   reduction study.
//!
//! Matrix and solver code is generic over the scalar (`f64` for simulation,
//! `BigRational` for exact verification); see the aliases below.

pub mod classical;
pub mod config;
pub mod edge_basis;
pub mod error;
pub mod graph;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod search;
pub mod stochastic;
pub mod szegedy;

pub use classical::{
    cesaro_mixing_time, clustered_hitting_time_exact, h_step_expectation, hitting_from_distance,
    hitting_time_exact_cycle, hitting_time_linear_solve, oresme_partial_sum,
    simulate_hitting_time, HittingReport, MixingReport,
};
pub use config::{GraphConfig, GraphSpec};
pub use edge_basis::EdgeBasis;
pub use error::{Error, Result};
pub use graph::{Graph, GraphKind, MarkedSet, ReductionMap};
pub use report::{Exact, SolveValue};
pub use search::{
    sampling_search_cost, sampling_search_cost_marked, separation_report, verify_exceptional,
    verify_grid_reduction, ExceptionalReport, GridReductionReport, SampleReport, SeparationReport,
};
pub use szegedy::{sign_table, uniform_initial_state, EdgeState, SignState, SignTable, Stage, SzegedyWalk};

/// Exact rational scalar used by the closed forms and the exact solver.
pub type Rational = num::BigRational;

/// Double-precision instantiations used by the simulators.
pub type Matrix64 = stochastic::StochasticMatrix<f64>;
pub type MatrixExact = stochastic::StochasticMatrix<Rational>;
pub type Distribution64 = stochastic::Distribution<f64>;
pub type EdgeState64 = szegedy::EdgeState<f64>;
pub type Walk64 = szegedy::SzegedyWalk<f64>;
