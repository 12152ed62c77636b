//! JSON run configuration.
//!
//! ```json
//! {"graph": {"kind": "cycle", "n": 6}, "marked": [1, 2, 4]}
//! {"graph": {"kind": "torus", "side": 5}, "marked": [1, 7, 13, 19, 25]}
//! {"graph": {"kind": "general", "adjacency": [[2, 3], [1, 3], [1, 2]]}}
//! ```
//!
//! Vertex labels in files are 1-based and converted to 0-based on load.
//! Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedSet};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GraphSpec {
    Cycle { n: usize },
    Torus { side: usize },
    /// Arbitrary simple graph; adjacency lists use 1-based labels.
    General { adjacency: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphConfig {
    pub graph: GraphSpec,
    /// Marked vertices, 1-based.
    #[serde(default)]
    pub marked: Vec<usize>,
}

impl GraphConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))
    }

    pub fn build_graph(&self) -> Result<Graph> {
        match &self.graph {
            GraphSpec::Cycle { n } => Graph::cycle(*n),
            GraphSpec::Torus { side } => Graph::torus_grid(*side),
            GraphSpec::General { adjacency } => {
                let n = adjacency.len();
                let zero_based = adjacency
                    .iter()
                    .map(|nb| {
                        nb.iter()
                            .map(|&v| {
                                if v == 0 || v > n {
                                    Err(Error::InvalidConfig(format!(
                                        "adjacency label {v} outside 1..={n}"
                                    )))
                                } else {
                                    Ok(v - 1)
                                }
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Graph::from_adjacency(zero_based)
            }
        }
    }

    pub fn build(&self) -> Result<(Graph, MarkedSet)> {
        let graph = self.build_graph()?;
        let marked = MarkedSet::from_one_based(self.marked.iter().copied(), graph.n())?;
        Ok((graph, marked))
    }
}
