//! The search walk `W' = R_b' R_a'`.
//!
//! Each reflection is applied per vertex as inversion about the average of
//! the incident edge amplitudes; at a marked vertex it instead fixes the
//! self-loop and flips every other incident edge (the search oracle). The
//! group update is O(edges) per step; no 2N²-sized operator is ever built.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::edge_basis::EdgeBasis;
use crate::error::Result;
use crate::graph::{Graph, MarkedSet};
use crate::scalar::{from_usize, RealScalar};
use crate::stochastic::StochasticMatrix;
use crate::szegedy::state::{uniform_initial_state, EdgeState};

/// Edge indices incident to one vertex on one side of the double cover.
#[derive(Clone, Debug)]
enum VertexGroup {
    /// Unmarked: invert the listed amplitudes about their mean.
    Unmarked { edges: Vec<usize> },
    /// Marked: fix the self-loop, negate the listed amplitudes.
    Marked { edges: Vec<usize> },
}

/// Prebuilt walk context for one `(graph, marked set)` configuration.
#[derive(Clone, Debug)]
pub struct SzegedyWalk<T> {
    marked: MarkedSet,
    basis: Arc<EdgeBasis>,
    initial: EdgeState<T>,
    x_groups: Vec<VertexGroup>,
    y_groups: Vec<VertexGroup>,
}

/// Point in a trajectory: the state after `t` full steps, or after the
/// X-side reflection inside step `t + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Stage {
    /// `(W')^t`
    Full(usize),
    /// `R_a'(W')^t`
    PostRa(usize),
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Full(t) => write!(f, "(W')^{t}"),
            Stage::PostRa(t) => write!(f, "R_a'(W')^{t}"),
        }
    }
}

impl<T: RealScalar> SzegedyWalk<T> {
    pub fn new(g: &Graph, marked: &MarkedSet) -> Result<Self> {
        let basis = Arc::new(EdgeBasis::new(g, marked)?);
        let p = StochasticMatrix::<T>::transition(g);
        let initial = uniform_initial_state(&p, &basis)?;

        let group = |by_x: bool| -> Vec<VertexGroup> {
            (0..g.n())
                .map(|v| {
                    let edges = g
                        .neighbors(v)
                        .iter()
                        .map(|&w| {
                            let (x, y) = if by_x { (v, w) } else { (w, v) };
                            basis.index_of(x, y).expect("basis covers all edges")
                        })
                        .collect();
                    if marked.contains(v) {
                        VertexGroup::Marked { edges }
                    } else {
                        VertexGroup::Unmarked { edges }
                    }
                })
                .collect()
        };

        Ok(Self {
            marked: marked.clone(),
            basis: basis.clone(),
            initial,
            x_groups: group(true),
            y_groups: group(false),
        })
    }

    pub fn basis(&self) -> &Arc<EdgeBasis> {
        &self.basis
    }

    pub fn marked(&self) -> &MarkedSet {
        &self.marked
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    /// `|ψ₀>`: the equal superposition over original directed edges.
    pub fn initial_state(&self) -> EdgeState<T> {
        self.initial.clone()
    }

    fn reflect(groups: &[VertexGroup], s: &EdgeState<T>) -> EdgeState<T> {
        let mut out = s.clone();
        let amps = out.amplitudes_mut();
        for g in groups {
            match g {
                VertexGroup::Unmarked { edges } => {
                    let sum = edges
                        .iter()
                        .fold(T::zero(), |acc, &i| acc + amps[i]);
                    let twice_mean = (sum + sum) / from_usize::<T>(edges.len());
                    for &i in edges {
                        amps[i] = twice_mean - amps[i];
                    }
                }
                VertexGroup::Marked { edges } => {
                    // self-loop amplitude untouched
                    for &i in edges {
                        amps[i] = -amps[i];
                    }
                }
            }
        }
        out
    }

    /// X-side reflection: inversion about the average at each `x`, sign flip
    /// at marked vertices.
    pub fn reflect_a(&self, s: &EdgeState<T>) -> EdgeState<T> {
        Self::reflect(&self.x_groups, s)
    }

    /// Y-side reflection: same action grouped by the second coordinate.
    pub fn reflect_b(&self, s: &EdgeState<T>) -> EdgeState<T> {
        Self::reflect(&self.y_groups, s)
    }

    /// One full step `W' = R_b' R_a'`.
    pub fn step(&self, s: &EdgeState<T>) -> EdgeState<T> {
        self.reflect_b(&self.reflect_a(s))
    }

    /// Trajectory `[ψ₀, ...]` over `steps` applications of `W'`. With
    /// `record_half_steps` the post-`R_a'` intermediates are included, giving
    /// `1 + 2·steps` states.
    pub fn evolve(&self, steps: usize, record_half_steps: bool) -> Vec<(Stage, EdgeState<T>)> {
        let mut out = Vec::with_capacity(1 + steps * if record_half_steps { 2 } else { 1 });
        let mut state = self.initial_state();
        out.push((Stage::Full(0), state.clone()));
        for t in 0..steps {
            let half = self.reflect_a(&state);
            if record_half_steps {
                out.push((Stage::PostRa(t), half.clone()));
            }
            state = self.reflect_b(&half);
            out.push((Stage::Full(t + 1), state.clone()));
        }
        out
    }

    /// Smallest `t <= max_steps` with `‖(W')^t ψ₀ - ψ₀‖_∞ < tol`. Because
    /// `W'` is unitary, a return to `ψ₀` establishes the period.
    pub fn detect_period(&self, max_steps: usize, tol: f64) -> Option<usize> {
        let psi0 = self.initial_state();
        let mut state = psi0.clone();
        for t in 1..=max_steps {
            state = self.step(&state);
            if state.infinity_distance(&psi0).to_f64().unwrap() < tol {
                return Some(t);
            }
        }
        None
    }
}
