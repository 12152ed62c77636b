//! Szegedy quantum walk on the directed-edge basis of the bipartite double
//! cover: edge states, the two per-side reflections, trajectory recording,
//! period detection, and the exact ±1 sign tracker for cycles.

mod sign;
mod state;
mod walk;

pub use sign::{sign_table, SignState, SignTable};
pub use state::{uniform_initial_state, EdgeState};
pub use walk::{Stage, SzegedyWalk};
