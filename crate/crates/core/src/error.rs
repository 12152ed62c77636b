//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Graph constructors reject sizes that would create multigraphs.
    #[error("invalid {what} size {got}: minimum is {min}")]
    InvalidSize {
        what: &'static str,
        got: usize,
        min: usize,
    },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid stochastic matrix: {0}")]
    InvalidMatrix(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("marked set is empty but the operation needs at least one marked vertex")]
    EmptyMarkedSet,

    /// The absorbing linear system is singular: some start vertex can never
    /// reach a marked vertex.
    #[error("no absorption: the marked set is unreachable from part of the graph")]
    NoAbsorption,

    #[error("trial {trial} exceeded the step cap of {cap} steps")]
    StepCapExceeded { trial: u64, cap: u64 },

    #[error("no convergence within {cap} steps")]
    ConvergenceCapExceeded { cap: u64 },

    #[error("chain is not irreducible: {0}")]
    NotIrreducible(String),

    /// Sign tracking is only valid on degree-2 graphs.
    #[error("unsupported structure: {0}")]
    UnsupportedStructure(String),

    /// An edge state or initial-state request does not fit the given basis.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
