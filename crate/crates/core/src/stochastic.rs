//! Row-stochastic transition matrices (sparse rows) and probability
//! distributions over vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, MarkedSet};
use crate::scalar::{from_usize, ratio_of, to_f64, Scalar};

/// Row sums must match 1 to this tolerance (checked through an `f64` view so
/// the same bound applies to exact and floating entries).
pub const ROW_SUM_TOL: f64 = 1e-12;

/// Sparse row-stochastic matrix. `rows[i]` holds `(column, probability)`
/// entries sorted by column; `P[i][j]` is the probability of moving from
/// vertex `i` to vertex `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct StochasticMatrix<T> {
    n: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> StochasticMatrix<T> {
    /// Validates column range, entry range `[0, 1]`, sorted columns and row
    /// sums.
    pub fn from_rows(n: usize, rows: Vec<Vec<(usize, T)>>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::InvalidMatrix(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let mut sum = T::zero();
            let mut last: Option<usize> = None;
            for (j, p) in row {
                if *j >= n {
                    return Err(Error::InvalidMatrix(format!(
                        "row {i}: column {j} out of range"
                    )));
                }
                if last.is_some_and(|prev| prev >= *j) {
                    return Err(Error::InvalidMatrix(format!(
                        "row {i}: columns not strictly increasing"
                    )));
                }
                last = Some(*j);
                if *p < T::zero() || *p > T::one() {
                    return Err(Error::InvalidMatrix(format!(
                        "row {i}: entry at column {j} outside [0, 1]"
                    )));
                }
                sum = sum + p.clone();
            }
            if to_f64(&(sum - T::one())).abs() > ROW_SUM_TOL {
                return Err(Error::InvalidMatrix(format!("row {i} does not sum to 1")));
            }
        }
        Ok(Self { n, rows })
    }

    /// Transition matrix of the simple random walk: `P[x][y] = 1 / deg(x)`
    /// for each neighbor `y` of `x`.
    pub fn transition(g: &Graph) -> Self {
        let rows = (0..g.n())
            .map(|v| {
                let deg = g.degree(v);
                g.neighbors(v)
                    .iter()
                    .map(|&w| (w, ratio_of::<T>(1, deg)))
                    .collect()
            })
            .collect();
        Self { n: g.n(), rows }
    }

    /// Absorbing variant: marked rows become identity rows, unmarked rows are
    /// copied unchanged. Applying it twice with the same set is a no-op.
    pub fn absorbing(&self, marked: &MarkedSet) -> Result<Self> {
        if let Some(v) = marked.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if marked.contains(i) {
                    vec![(i, T::one())]
                } else {
                    row.clone()
                }
            })
            .collect();
        Ok(Self { n: self.n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    /// Entry `(i, j)`, zero when absent from the sparse row.
    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map(|pos| self.rows[i][pos].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn is_row_stochastic(&self, tol: f64) -> bool {
        self.rows.iter().all(|row| {
            let sum = row
                .iter()
                .fold(T::zero(), |acc, (_, p)| acc + p.clone());
            to_f64(&(sum - T::one())).abs() <= tol
        })
    }

    /// True when row `i` is the identity row `e_i`.
    pub fn is_identity_row(&self, i: usize) -> bool {
        self.rows[i].len() == 1 && self.rows[i][0].0 == i && self.rows[i][0].1 == T::one()
    }

    /// One step of the forward equation: `out = d P`.
    pub fn propagate(&self, d: &Distribution<T>) -> Distribution<T> {
        debug_assert_eq!(d.len(), self.n);
        let mut out = vec![T::zero(); self.n];
        for (i, row) in self.rows.iter().enumerate() {
            let di = &d.probs[i];
            if di.is_zero() {
                continue;
            }
            for (j, p) in row {
                out[*j] = out[*j].clone() + di.clone() * p.clone();
            }
        }
        Distribution { probs: out }
    }

    /// Strong connectivity of the support digraph (forward and backward
    /// reachability from vertex 0).
    pub fn is_irreducible(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let forward: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&(j, _)| j).collect())
            .collect();
        let mut backward = vec![Vec::new(); self.n];
        for (i, row) in forward.iter().enumerate() {
            for &j in row {
                backward[j].push(i);
            }
        }
        let reach = |adj: &Vec<Vec<usize>>| {
            let mut seen = vec![false; self.n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(&forward) && reach(&backward)
    }
}

/// Probability vector over the original vertices (classical occupancy or an
/// X-partite measurement).
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<T> {
    probs: Vec<T>,
}

impl<T: Scalar> Distribution<T> {
    pub fn from_probs(probs: Vec<T>) -> Result<Self> {
        let d = Self { probs };
        if !d.is_valid(1e-10) {
            return Err(Error::InvalidMatrix(
                "distribution entries must be nonnegative and sum to 1".into(),
            ));
        }
        Ok(d)
    }

    pub fn point_mass(v: usize, n: usize) -> Result<Self> {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut probs = vec![T::zero(); n];
        probs[v] = T::one();
        Ok(Self { probs })
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            probs: vec![ratio_of::<T>(1, n); n],
        }
    }

    pub(crate) fn from_raw(probs: Vec<T>) -> Self {
        Self { probs }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn prob(&self, v: usize) -> &T {
        &self.probs[v]
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        let sum = self
            .probs
            .iter()
            .fold(T::zero(), |acc, p| acc + p.clone());
        self.probs.iter().all(|p| to_f64(p) >= -tol) && (to_f64(&sum) - 1.0).abs() <= tol
    }

    /// Total-variation distance `(1/2) Σ |p_i - q_i|`.
    pub fn tv_distance(&self, other: &Self) -> T {
        debug_assert_eq!(self.len(), other.len());
        let two = from_usize::<T>(2);
        self.probs
            .iter()
            .zip(&other.probs)
            .fold(T::zero(), |acc, (p, q)| acc + (p.clone() - q.clone()).abs())
            / two
    }

    /// Largest pointwise deviation from the uniform distribution.
    pub fn max_deviation_from_uniform(&self) -> f64 {
        let u = 1.0 / self.len() as f64;
        self.probs
            .iter()
            .map(|p| (to_f64(p) - u).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cycle_transition_rows() {
        let g = Graph::cycle(6).unwrap();
        let p = StochasticMatrix::<BigRational>::transition(&g);
        assert_eq!(p.get(0, 1), rat(1, 2));
        assert_eq!(p.get(0, 5), rat(1, 2));
        assert!(p.get(0, 2).is_zero());
        let pf = StochasticMatrix::<f64>::transition(&g);
        assert_eq!(pf.get(0, 1), 0.5);
    }

    #[test]
    fn triangle_transition_is_all_halves() {
        let g = Graph::cycle(3).unwrap();
        let p = StochasticMatrix::<BigRational>::transition(&g);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(p.get(i, j), rat(1, 2));
                }
            }
        }
    }

    #[test]
    fn torus_transition_is_all_quarters() {
        let g = Graph::torus_grid(3).unwrap();
        let p = StochasticMatrix::<BigRational>::transition(&g);
        for v in 0..9 {
            for &w in g.neighbors(v) {
                assert_eq!(p.get(v, w), rat(1, 4));
            }
        }
    }

    #[test]
    fn absorbing_matches_marked_cycle_six() {
        // N = 6 cycle with vertices {0, 1, 3} marked: marked rows are
        // identity, unmarked rows keep their 1/2 entries.
        let g = Graph::cycle(6).unwrap();
        let m = MarkedSet::new([0, 1, 3], 6).unwrap();
        let p = StochasticMatrix::<BigRational>::transition(&g);
        let pp = p.absorbing(&m).unwrap();
        let half = rat(1, 2);
        let one = rat(1, 1);
        let expect = [
            vec![(0usize, one.clone())],
            vec![(1, one.clone())],
            vec![(1, half.clone()), (3, half.clone())],
            vec![(3, one.clone())],
            vec![(3, half.clone()), (5, half.clone())],
            vec![(0, half.clone()), (4, half.clone())],
        ];
        for (i, row) in expect.iter().enumerate() {
            assert_eq!(pp.row(i), row.as_slice(), "row {i}");
        }
    }

    #[test]
    fn absorbing_empty_and_full() {
        let g = Graph::cycle(5).unwrap();
        let p = StochasticMatrix::<f64>::transition(&g);
        let unchanged = p.absorbing(&MarkedSet::empty(5)).unwrap();
        assert_eq!(unchanged, p);
        let ident = p.absorbing(&MarkedSet::full(5)).unwrap();
        assert!((0..5).all(|i| ident.is_identity_row(i)));
    }

    #[test]
    fn from_rows_validation() {
        assert!(StochasticMatrix::from_rows(2, vec![vec![(0, 0.5), (1, 0.5)], vec![(1, 1.0)]]).is_ok());
        // bad sum
        assert!(StochasticMatrix::from_rows(1, vec![vec![(0, 0.9)]]).is_err());
        // out of range entry
        assert!(StochasticMatrix::from_rows(1, vec![vec![(0, 1.5)]]).is_err());
        // unsorted columns
        assert!(
            StochasticMatrix::from_rows(2, vec![vec![(1, 0.5), (0, 0.5)], vec![(1, 1.0)]]).is_err()
        );
    }

    #[test]
    fn propagate_point_mass() {
        let g = Graph::cycle(4).unwrap();
        let p = StochasticMatrix::<f64>::transition(&g);
        let d = Distribution::<f64>::point_mass(0, 4).unwrap();
        let d1 = p.propagate(&d);
        assert_eq!(d1.probs(), &[0.0, 0.5, 0.0, 0.5]);
        assert!(d1.is_valid(1e-12));
    }

    #[test]
    fn irreducibility() {
        let g = Graph::cycle(5).unwrap();
        let p = StochasticMatrix::<f64>::transition(&g);
        assert!(p.is_irreducible());
        let pp = p.absorbing(&MarkedSet::new([0], 5).unwrap()).unwrap();
        assert!(!pp.is_irreducible());
    }

    #[test]
    fn tv_distance_basics() {
        let a = Distribution::<f64>::point_mass(0, 4).unwrap();
        let b = Distribution::<f64>::uniform(4);
        assert!((a.tv_distance(&b) - 0.75).abs() < 1e-15);
        assert_eq!(b.tv_distance(&b), 0.0);
    }

    proptest! {
        #[test]
        fn generated_matrices_are_row_stochastic(n in 3usize..=200) {
            let g = Graph::cycle(n).unwrap();
            let p = StochasticMatrix::<f64>::transition(&g);
            prop_assert!(p.is_row_stochastic(ROW_SUM_TOL));
            let pr = StochasticMatrix::<BigRational>::transition(&g);
            prop_assert!(pr.is_row_stochastic(0.0));
        }

        #[test]
        fn torus_matrices_are_row_stochastic(side in 3usize..=14) {
            let g = Graph::torus_grid(side).unwrap();
            let p = StochasticMatrix::<f64>::transition(&g);
            prop_assert!(p.is_row_stochastic(ROW_SUM_TOL));
        }

        #[test]
        fn absorbing_is_idempotent(n in 3usize..=40, seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::cycle(n).unwrap();
            let marked: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.3)).collect();
            let m = MarkedSet::new(marked, n).unwrap();
            let p = StochasticMatrix::<f64>::transition(&g);
            let once = p.absorbing(&m).unwrap();
            let twice = once.absorbing(&m).unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
