//! Exact ±1 sign tracking on cycles.
//!
//! On a degree-2 graph each reflection either fixes or flips a vertex's edge
//! pair: a marked vertex flips both incident edges, an unmarked vertex flips
//! them exactly when their signs differ. The walk therefore never leaves the
//! set of states with amplitude `±1/sqrt(2N)` on every original edge and 0
//! on every self-loop, and we can evolve it in integer arithmetic.

use std::sync::Arc;

use crate::edge_basis::EdgeBasis;
use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedSet};
use crate::scalar::{from_usize, RealScalar};
use crate::szegedy::state::EdgeState;
use crate::szegedy::walk::Stage;

/// Signs over the `2N` directed edges of an `N`-cycle with implicit
/// magnitude `1/sqrt(2N)`; marked self-loop amplitudes are implicitly zero.
///
/// Layout: `signs[2x]` is the clockwise edge `(x, x+1)`, `signs[2x + 1]` the
/// counterclockwise edge `(x, x-1)`, indices mod `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignState {
    n: usize,
    signs: Vec<i8>,
}

impl SignState {
    /// All-plus state (the sign pattern of `|ψ₀>`) on an `n`-cycle.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                what: "cycle",
                got: n,
                min: 3,
            });
        }
        Ok(Self {
            n,
            signs: vec![1; 2 * n],
        })
    }

    /// Checked constructor from a graph; sign tracking is only sound on
    /// cycles, where inversion about the average preserves sign-only states.
    pub fn for_graph(g: &Graph) -> Result<Self> {
        if !g.is_cycle() {
            return Err(Error::UnsupportedStructure(
                "sign tracking requires a cycle (every vertex of degree 2)".into(),
            ));
        }
        Self::uniform(g.n())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self, x: usize, y: usize) -> Option<i8> {
        if y == (x + 1) % self.n {
            Some(self.signs[2 * x])
        } else if y == (x + self.n - 1) % self.n {
            Some(self.signs[2 * x + 1])
        } else {
            None
        }
    }

    pub fn is_all_plus(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// X-side half step: flip marked vertices' outgoing pair, flip an
    /// unmarked pair when its two signs differ.
    pub fn half_step_x(&self, marked: &MarkedSet) -> Self {
        let mut signs = self.signs.clone();
        for x in 0..self.n {
            let (cw, ccw) = (2 * x, 2 * x + 1);
            if marked.contains(x) || signs[cw] != signs[ccw] {
                signs[cw] = -signs[cw];
                signs[ccw] = -signs[ccw];
            }
        }
        Self { n: self.n, signs }
    }

    /// Y-side half step: the same rule grouped by the head vertex.
    pub fn half_step_y(&self, marked: &MarkedSet) -> Self {
        let mut signs = self.signs.clone();
        for y in 0..self.n {
            // incoming edges: (y-1 -> y) is cw of y-1, (y+1 -> y) is ccw of y+1
            let from_prev = 2 * ((y + self.n - 1) % self.n);
            let from_next = 2 * ((y + 1) % self.n) + 1;
            if marked.contains(y) || signs[from_prev] != signs[from_next] {
                signs[from_prev] = -signs[from_prev];
                signs[from_next] = -signs[from_next];
            }
        }
        Self { n: self.n, signs }
    }

    /// One full step `W' = R_b' R_a'` in sign arithmetic.
    pub fn step(&self, marked: &MarkedSet) -> Self {
        self.half_step_x(marked).half_step_y(marked)
    }

    /// Signs in lexicographic `(x, y)` edge order, matching
    /// [`EdgeState::edge_signs`].
    pub fn signs_lexicographic(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(2 * self.n);
        for x in 0..self.n {
            let prev = (x + self.n - 1) % self.n;
            let next = (x + 1) % self.n;
            if prev < next {
                out.push(self.signs[2 * x + 1]);
                out.push(self.signs[2 * x]);
            } else {
                out.push(self.signs[2 * x]);
                out.push(self.signs[2 * x + 1]);
            }
        }
        out
    }

    /// Expansion into a dense edge state with magnitude `1/sqrt(2N)`.
    pub fn to_edge_state<T: RealScalar>(&self, basis: &Arc<EdgeBasis>) -> Result<EdgeState<T>> {
        if basis.n() != self.n {
            return Err(Error::BasisMismatch(format!(
                "sign state over {} vertices, basis over {}",
                self.n,
                basis.n()
            )));
        }
        let mag = (from_usize::<T>(2 * self.n)).sqrt().recip();
        let mut amps = vec![T::zero(); basis.len()];
        for (i, amp) in amps.iter_mut().enumerate() {
            let (x, y) = basis.pair_at(i);
            if x != y {
                let s = self.sign(x, y).ok_or_else(|| {
                    Error::BasisMismatch(format!("basis edge ({x}, {y}) is not a cycle edge"))
                })?;
                *amp = if s > 0 { mag } else { -mag };
            }
        }
        EdgeState::new(basis.clone(), amps)
    }
}

/// One full-step / half-step sign pattern per column for the requested stage
/// range: `(W')^t` and `R_a'(W')^t` for `t` in `first_stage..=last_stage`.
///
/// Rows are the `2n` directed edges in ring order — for each vertex `x`
/// (ascending), first `(x, x-1)` then `(x, x+1)` — labeled 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignTable {
    pub edge_labels: Vec<String>,
    pub stage_labels: Vec<String>,
    /// `entries[row][col]`, each `+1` or `-1`.
    pub entries: Vec<Vec<i8>>,
}

pub fn sign_table(
    n: usize,
    marked: &MarkedSet,
    first_stage: usize,
    last_stage: usize,
) -> Result<SignTable> {
    if first_stage > last_stage {
        return Err(Error::Domain(format!(
            "empty stage range {first_stage}..={last_stage}"
        )));
    }
    let mut state = SignState::uniform(n)?;
    if marked.n() != n {
        return Err(Error::Domain(format!(
            "marked set is over {} vertices, cycle has {n}",
            marked.n()
        )));
    }

    let row_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| [(x, (x + n - 1) % n), (x, (x + 1) % n)])
        .collect();
    let mut stage_labels = Vec::new();
    let mut columns: Vec<Vec<i8>> = Vec::new();
    let mut record = |stage: Stage, s: &SignState| {
        stage_labels.push(stage.to_string());
        columns.push(
            row_edges
                .iter()
                .map(|&(x, y)| s.sign(x, y).expect("ring edge"))
                .collect(),
        );
    };

    for t in 0..=last_stage {
        if t >= first_stage {
            record(Stage::Full(t), &state);
        }
        let half = state.half_step_x(marked);
        if t >= first_stage {
            record(Stage::PostRa(t), &half);
        }
        state = half.half_step_y(marked);
    }

    let entries = (0..row_edges.len())
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    Ok(SignTable {
        edge_labels: row_edges
            .iter()
            .map(|&(x, y)| format!("|{},{}>", x + 1, y + 1))
            .collect(),
        stage_labels,
        entries,
    })
}
