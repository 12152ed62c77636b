//! Directed-edge basis of the bipartite double cover.
//!
//! The walk state lives on basis elements `|x,y>`: every directed edge of the
//! original graph in both directions, plus one self-loop `|i,i>` per marked
//! vertex. Note the self-loops cannot be recovered from the absorbing matrix
//! alone once two adjacent vertices are marked (their connecting edge drops
//! out of the absorbing support entirely), so construction takes the original
//! graph or matrix together with the marked set.

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedSet};
use crate::scalar::Scalar;
use crate::stochastic::StochasticMatrix;

/// Ordered directed-pair basis, lexicographic on `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBasis {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl EdgeBasis {
    pub fn new(g: &Graph, marked: &MarkedSet) -> Result<Self> {
        if let Some(v) = marked.iter().find(|&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        let mut pairs = Vec::with_capacity(2 * g.n() * 2 + marked.k());
        for x in 0..g.n() {
            if marked.contains(x) {
                // lexicographic: (x, x) slots between (x, y<x) and (x, y>x)
                let mut placed = false;
                for &y in g.neighbors(x) {
                    if !placed && y > x {
                        pairs.push((x, x));
                        placed = true;
                    }
                    pairs.push((x, y));
                }
                if !placed {
                    pairs.push((x, x));
                }
            } else {
                pairs.extend(g.neighbors(x).iter().map(|&y| (x, y)));
            }
        }
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        Ok(Self { n: g.n(), pairs })
    }

    /// Basis from the support of an (unmarked) transition matrix plus the
    /// marked self-loops.
    pub fn from_support<T: Scalar>(p: &StochasticMatrix<T>, marked: &MarkedSet) -> Result<Self> {
        if let Some(v) = marked.iter().find(|&v| v >= p.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: p.n() });
        }
        let mut pairs = Vec::new();
        for x in 0..p.n() {
            let mut row: Vec<usize> = p.row(x).iter().map(|&(y, _)| y).collect();
            if marked.contains(x) && !row.contains(&x) {
                row.push(x);
                row.sort_unstable();
            }
            pairs.extend(row.into_iter().map(|y| (x, y)));
        }
        Ok(Self { n: p.n(), pairs })
    }

    /// Number of original vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pair_at(&self, index: usize) -> (usize, usize) {
        self.pairs[index]
    }

    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        self.pairs.binary_search(&(x, y)).ok()
    }

    pub fn is_self_loop(&self, index: usize) -> bool {
        let (x, y) = self.pairs[index];
        x == y
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn self_loop_count(&self) -> usize {
        self.pairs.iter().filter(|(x, y)| x == y).count()
    }

    /// `|x,y>` label with 1-based vertex numbers, as used in emitted tables.
    pub fn label(&self, index: usize) -> String {
        let (x, y) = self.pairs[index];
        format!("|{},{}>", x + 1, y + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unmarked_cycle_has_two_n_states() {
        let g = Graph::cycle(6).unwrap();
        let b = EdgeBasis::new(&g, &MarkedSet::empty(6)).unwrap();
        assert_eq!(b.len(), 12);
        assert_eq!(b.self_loop_count(), 0);
    }

    #[test]
    fn marked_cycle_adds_self_loops() {
        let g = Graph::cycle(6).unwrap();
        let m = MarkedSet::new([0, 1, 3], 6).unwrap();
        let b = EdgeBasis::new(&g, &m).unwrap();
        assert_eq!(b.len(), 15);
        assert_eq!(b.self_loop_count(), 3);
        assert!(b.index_of(0, 0).is_some());
        assert!(b.index_of(1, 2).is_some(), "edge between adjacent marked vertices is kept");
        assert!(b.index_of(2, 2).is_none());
    }

    #[test]
    fn fully_marked_triangle() {
        let g = Graph::cycle(3).unwrap();
        let b = EdgeBasis::new(&g, &MarkedSet::full(3)).unwrap();
        assert_eq!(b.self_loop_count(), 3);
        assert_eq!(b.len(), 9);
    }

    #[test]
    fn lexicographic_order_and_roundtrip() {
        let g = Graph::cycle(7).unwrap();
        let m = MarkedSet::new([0, 2, 6], 7).unwrap();
        let b = EdgeBasis::new(&g, &m).unwrap();
        assert!(b.pairs().windows(2).all(|w| w[0] < w[1]));
        for i in 0..b.len() {
            let (x, y) = b.pair_at(i);
            assert_eq!(b.index_of(x, y), Some(i));
        }
    }

    #[test]
    fn from_support_matches_graph_construction() {
        let g = Graph::cycle(6).unwrap();
        let m = MarkedSet::new([0, 1, 3], 6).unwrap();
        let p = StochasticMatrix::<f64>::transition(&g);
        let a = EdgeBasis::new(&g, &m).unwrap();
        let b = EdgeBasis::from_support(&p, &m).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn labels_are_one_based() {
        let g = Graph::cycle(6).unwrap();
        let b = EdgeBasis::new(&g, &MarkedSet::empty(6)).unwrap();
        let i = b.index_of(0, 5).unwrap();
        assert_eq!(b.label(i), "|1,6>");
    }
}
