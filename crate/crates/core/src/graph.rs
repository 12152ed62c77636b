//! Graphs, marked sets and the torus-diagonal reduction map.
//!
//! All vertex indices are 0-based internally; anything user-facing converts
//! at the boundary (see the config and report code).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphKind {
    Cycle,
    TorusGrid { side: usize },
    General,
}

/// Undirected simple graph: symmetric adjacency, no self-loops, no duplicate
/// neighbors. Neighbor lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    kind: GraphKind,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Cycle of `n >= 3` vertices; vertex `i` is adjacent to `(i ± 1) mod n`.
    /// A 2-cycle would be a multigraph, so it is rejected.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                what: "cycle",
                got: n,
                min: 3,
            });
        }
        let adjacency = (0..n)
            .map(|i| {
                let mut nb = vec![(i + n - 1) % n, (i + 1) % n];
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(Self {
            kind: GraphKind::Cycle,
            adjacency,
        })
    }

    /// Periodic square lattice of `side × side` vertices, row-major indexing
    /// `(i, j) -> i * side + j`. Every vertex has degree 4.
    pub fn torus_grid(side: usize) -> Result<Self> {
        if side < 3 {
            return Err(Error::InvalidSize {
                what: "torus grid",
                got: side,
                min: 3,
            });
        }
        let vid = |i: usize, j: usize| (i % side) * side + (j % side);
        let adjacency = (0..side * side)
            .map(|v| {
                let (i, j) = (v / side, v % side);
                let mut nb = vec![
                    vid(i + side - 1, j),
                    vid(i + 1, j),
                    vid(i, j + side - 1),
                    vid(i, j + 1),
                ];
                nb.sort_unstable();
                nb
            })
            .collect();
        Ok(Self {
            kind: GraphKind::TorusGrid { side },
            adjacency,
        })
    }

    /// General simple graph from adjacency lists (0-based). Validates
    /// symmetry, no self-loops, no duplicates. Isolated vertices are
    /// rejected because every operation here walks on the graph.
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adjacency: Vec<Vec<usize>> = adjacency;
        for (v, nb) in adjacency.iter_mut().enumerate() {
            if nb.is_empty() {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} has no neighbors; walks are undefined on it"
                )));
            }
            nb.sort_unstable();
            for &w in nb.iter() {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
                if w == v {
                    return Err(Error::InvalidGraph(format!("self-loop at vertex {v}")));
                }
            }
            if nb.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate neighbor in adjacency of vertex {v}"
                )));
            }
        }
        for v in 0..n {
            for &w in &adjacency[v] {
                if adjacency[w].binary_search(&v).is_err() {
                    return Err(Error::InvalidGraph(format!(
                        "asymmetric adjacency: {v} lists {w} but not vice versa"
                    )));
                }
            }
        }
        Ok(Self {
            kind: GraphKind::General,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.adjacency[v].binary_search(&w).is_ok()
    }

    /// True when every vertex has exactly two neighbors arranged in a single
    /// ring. This is what the sign tracker requires.
    pub fn is_cycle(&self) -> bool {
        match self.kind {
            GraphKind::Cycle => true,
            _ => {
                self.n() >= 3
                    && (0..self.n()).all(|v| self.degree(v) == 2)
                    && self.is_connected()
            }
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Sorted set of marked (search-target) vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSet {
    marked: Vec<usize>,
    mask: Vec<bool>,
}

impl MarkedSet {
    /// Builds from 0-based indices; sorts, deduplicates and bounds-checks
    /// against `n`.
    pub fn new(indices: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut marked: Vec<usize> = indices.into_iter().collect();
        marked.sort_unstable();
        marked.dedup();
        if let Some(&v) = marked.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut mask = vec![false; n];
        for &v in &marked {
            mask[v] = true;
        }
        Ok(Self { marked, mask })
    }

    /// 1-based labels as they appear in config files and report output.
    pub fn from_one_based(labels: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let zero_based: Vec<usize> = labels
            .into_iter()
            .map(|v| {
                if v == 0 || v > n {
                    Err(Error::VertexOutOfRange { vertex: v, n })
                } else {
                    Ok(v - 1)
                }
            })
            .collect::<Result<_>>()?;
        Self::new(zero_based, n)
    }

    pub fn empty(n: usize) -> Self {
        Self::new([], n).expect("empty set is always valid")
    }

    pub fn full(n: usize) -> Self {
        Self::new(0..n, n).expect("full set is always valid")
    }

    /// The main diagonal `{(i, i)}` of a `side × side` torus grid.
    pub fn diagonal(side: usize) -> Result<Self> {
        if side < 3 {
            return Err(Error::InvalidSize {
                what: "torus grid",
                got: side,
                min: 3,
            });
        }
        Self::new((0..side).map(|i| i * side + i), side * side)
    }

    pub fn k(&self) -> usize {
        self.marked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marked.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.marked.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.marked
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.marked.iter().map(|v| v + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.mask.len()
    }
}

/// Quotient of the `side × side` torus by the diagonal shift
/// `(i, j) -> (i + 1, j + 1)`: vertex `(i, j)` belongs to class
/// `(i - j) mod side`. The marked diagonal is exactly class 0 and the
/// quotient walk is a cycle of length `side` with class 0 marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionMap {
    side: usize,
}

impl ReductionMap {
    pub fn new(side: usize) -> Result<Self> {
        if side < 3 {
            return Err(Error::InvalidSize {
                what: "torus grid",
                got: side,
                min: 3,
            });
        }
        Ok(Self { side })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn class_of_coords(&self, i: usize, j: usize) -> usize {
        (i % self.side + self.side - j % self.side) % self.side
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.class_of_coords(vertex / self.side, vertex % self.side)
    }

    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.side * self.side)
            .filter(|&v| self.class_of(v) == class)
            .collect()
    }

    /// Image of a vertex under the generating shift `(i, j) -> (i+1, j+1)`.
    pub fn shift(&self, vertex: usize) -> usize {
        let (i, j) = (vertex / self.side, vertex % self.side);
        ((i + 1) % self.side) * self.side + (j + 1) % self.side
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycle_six_matches_ring() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.neighbors(0), &[1, 5]);
        assert_eq!(g.neighbors(3), &[2, 4]);
        assert_eq!(g.kind(), GraphKind::Cycle);
    }

    #[test]
    fn smallest_cycle_has_degree_two_everywhere() {
        let g = Graph::cycle(3).unwrap();
        assert!((0..3).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn cycle_nine_is_a_ring() {
        let g = Graph::cycle(9).unwrap();
        for v in 0..9 {
            assert!(g.has_edge(v, (v + 1) % 9));
            assert!(g.has_edge(v, (v + 8) % 9));
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn two_cycle_rejected() {
        assert!(matches!(
            Graph::cycle(2),
            Err(Error::InvalidSize { got: 2, .. })
        ));
    }

    #[test]
    fn torus_three_is_four_regular() {
        let g = Graph::torus_grid(3).unwrap();
        assert_eq!(g.n(), 9);
        assert!((0..9).all(|v| g.degree(v) == 4));
        // (0,0) wraps to (1,0), (2,0), (0,1), (0,2)
        assert_eq!(g.neighbors(0), &[1, 2, 3, 6]);
    }

    #[test]
    fn torus_five() {
        let g = Graph::torus_grid(5).unwrap();
        assert_eq!(g.n(), 25);
        assert!((0..25).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn torus_two_rejected() {
        assert!(Graph::torus_grid(2).is_err());
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![vec![1], vec![0]]).is_ok());
        // asymmetric
        assert!(Graph::from_adjacency(vec![vec![1], vec![2], vec![1]]).is_err());
        // self-loop
        assert!(Graph::from_adjacency(vec![vec![0]]).is_err());
        // duplicate
        assert!(Graph::from_adjacency(vec![vec![1, 1], vec![0, 0]]).is_err());
        // out of range
        assert!(Graph::from_adjacency(vec![vec![3], vec![0]]).is_err());
        // isolated vertex / empty graph
        assert!(Graph::from_adjacency(vec![vec![1], vec![0], vec![]]).is_err());
        assert!(Graph::from_adjacency(vec![]).is_err());
    }

    #[test]
    fn marked_set_basics() {
        let m = MarkedSet::new([3, 0, 1, 3], 6).unwrap();
        assert_eq!(m.as_slice(), &[0, 1, 3]);
        assert_eq!(m.k(), 3);
        assert!(m.contains(1) && !m.contains(2));
        assert!(MarkedSet::new([6], 6).is_err());
    }

    #[test]
    fn marked_set_one_based() {
        let m = MarkedSet::from_one_based([1, 2, 4], 6).unwrap();
        assert_eq!(m.as_slice(), &[0, 1, 3]);
        assert_eq!(m.one_based(), vec![1, 2, 4]);
        assert!(MarkedSet::from_one_based([0], 6).is_err());
        assert!(MarkedSet::from_one_based([7], 6).is_err());
    }

    #[test]
    fn diagonal_marked_set() {
        let m = MarkedSet::diagonal(3).unwrap();
        assert_eq!(m.as_slice(), &[0, 4, 8]);
        assert_eq!(m.k(), 3);
        let m5 = MarkedSet::diagonal(5).unwrap();
        assert_eq!(m5.k(), 5);
        // diagonal vertices are mutually non-adjacent on the torus
        let g = Graph::torus_grid(3).unwrap();
        for a in m.iter() {
            for b in m.iter() {
                assert!(!g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn reduction_map_classes() {
        let r = ReductionMap::new(5).unwrap();
        for c in 0..5 {
            assert_eq!(r.class_members(c).len(), 5);
        }
        // diagonal is class 0
        for i in 0..5 {
            assert_eq!(r.class_of(i * 5 + i), 0);
        }
        let r3 = ReductionMap::new(3).unwrap();
        assert_eq!(r3.class_of_coords(1, 2), 2);
    }

    #[test]
    fn quotient_hitting_time_of_side_five_is_four() {
        // the quotient cycle of a side-5 torus has (5^2 - 1) / 6 = 4
        let ht = crate::classical::hitting_time_exact_cycle(5);
        assert_eq!(ht, num::BigRational::from_integer(4.into()));
    }

    proptest! {
        #[test]
        fn reduction_partitions_and_respects_adjacency(side in 3usize..12) {
            let g = Graph::torus_grid(side).unwrap();
            let r = ReductionMap::new(side).unwrap();
            // classes partition the vertex set into `side` classes of `side`
            let mut counts = vec![0usize; side];
            for v in 0..g.n() {
                counts[r.class_of(v)] += 1;
            }
            prop_assert!(counts.iter().all(|&c| c == side));
            // neighbors land in classes c ± 1: exactly the cycle adjacency
            for v in 0..g.n() {
                let c = r.class_of(v) as isize;
                let s = side as isize;
                for &w in g.neighbors(v) {
                    let cw = r.class_of(w) as isize;
                    let diff = ((cw - c) % s + s) % s;
                    prop_assert!(diff == 1 || diff == s - 1);
                }
            }
            // the shift generator preserves classes
            for v in 0..g.n() {
                prop_assert_eq!(r.class_of(r.shift(v)), r.class_of(v));
            }
        }
    }
}
