//! Edge-space states.
//!
//! The initial state and both reflections are real, so amplitudes stay real
//! for all time; states are plain real vectors over the edge basis.

use std::sync::Arc;

use crate::edge_basis::EdgeBasis;
use crate::error::{Error, Result};
use crate::scalar::{from_usize, RealScalar};
use crate::stochastic::{Distribution, StochasticMatrix};

/// Amplitude vector over an [`EdgeBasis`].
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeState<T> {
    basis: Arc<EdgeBasis>,
    amplitudes: Vec<T>,
}

impl<T: RealScalar> EdgeState<T> {
    pub fn new(basis: Arc<EdgeBasis>, amplitudes: Vec<T>) -> Result<Self> {
        if amplitudes.len() != basis.len() {
            return Err(Error::BasisMismatch(format!(
                "{} amplitudes for a basis of {} elements",
                amplitudes.len(),
                basis.len()
            )));
        }
        Ok(Self { basis, amplitudes })
    }

    /// Basis state `|x,y>`.
    pub fn basis_state(basis: Arc<EdgeBasis>, x: usize, y: usize) -> Result<Self> {
        let idx = basis
            .index_of(x, y)
            .ok_or_else(|| Error::BasisMismatch(format!("pair ({x}, {y}) not in basis")))?;
        let mut amplitudes = vec![T::zero(); basis.len()];
        amplitudes[idx] = T::one();
        Ok(Self { basis, amplitudes })
    }

    pub fn basis(&self) -> &Arc<EdgeBasis> {
        &self.basis
    }

    pub fn amplitudes(&self) -> &[T] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [T] {
        &mut self.amplitudes
    }

    pub fn amplitude(&self, x: usize, y: usize) -> Option<T> {
        self.basis.index_of(x, y).map(|i| self.amplitudes[i])
    }

    pub fn norm(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, a| acc + *a * *a)
            .sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm().to_f64().unwrap() - 1.0).abs() <= tol
    }

    /// `max_i |self_i - other_i|`.
    pub fn infinity_distance(&self, other: &Self) -> T {
        debug_assert_eq!(self.basis, other.basis);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }

    /// Measurement in the X partite set: `probs[x] = Σ_y |c_{x,y}|²`,
    /// self-loops included.
    pub fn measure_x(&self) -> Distribution<T> {
        let mut probs = vec![T::zero(); self.basis.n()];
        for (i, a) in self.amplitudes.iter().enumerate() {
            let (x, _) = self.basis.pair_at(i);
            probs[x] = probs[x] + *a * *a;
        }
        Distribution::from_raw(probs)
    }

    /// Signs of the non-loop amplitudes (`+1`/`-1`), or `None` if any is
    /// zero. Loop entries are skipped.
    pub fn edge_signs(&self) -> Option<Vec<i8>> {
        let mut signs = Vec::with_capacity(self.amplitudes.len());
        for (i, a) in self.amplitudes.iter().enumerate() {
            if self.basis.is_self_loop(i) {
                continue;
            }
            if a.is_zero() {
                return None;
            }
            signs.push(if *a > T::zero() { 1 } else { -1 });
        }
        Some(signs)
    }
}

/// The search start state, defined from the *unmarked* matrix `P`:
/// amplitude `sqrt(P_xy / N)` on every original directed edge and 0 on
/// marked self-loops. On the cycle every edge gets `1 / sqrt(2N)`.
pub fn uniform_initial_state<T: RealScalar>(
    p: &StochasticMatrix<T>,
    basis: &Arc<EdgeBasis>,
) -> Result<EdgeState<T>> {
    if p.n() != basis.n() {
        return Err(Error::BasisMismatch(format!(
            "matrix over {} vertices, basis over {}",
            p.n(),
            basis.n()
        )));
    }
    let n = from_usize::<T>(p.n());
    let mut amplitudes = vec![T::zero(); basis.len()];
    for x in 0..p.n() {
        for (y, prob) in p.row(x) {
            let idx = basis.index_of(x, *y).ok_or_else(|| {
                Error::BasisMismatch(format!("edge ({x}, {y}) of P missing from the basis"))
            })?;
            amplitudes[idx] = (*prob / n).sqrt();
        }
    }
    Ok(EdgeState {
        basis: basis.clone(),
        amplitudes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, MarkedSet};

    fn setup(n: usize, marked: &[usize]) -> (StochasticMatrix<f64>, Arc<EdgeBasis>) {
        let g = Graph::cycle(n).unwrap();
        let m = MarkedSet::new(marked.iter().copied(), n).unwrap();
        let p = StochasticMatrix::<f64>::transition(&g);
        let basis = Arc::new(EdgeBasis::new(&g, &m).unwrap());
        (p, basis)
    }

    #[test]
    fn initial_state_on_marked_cycle_six() {
        let (p, basis) = setup(6, &[0, 1, 3]);
        let s = uniform_initial_state(&p, &basis).unwrap();
        let amp = 1.0 / 12.0f64.sqrt();
        for i in 0..basis.len() {
            if basis.is_self_loop(i) {
                assert_eq!(s.amplitudes()[i], 0.0);
            } else {
                assert!((s.amplitudes()[i] - amp).abs() < 1e-15);
            }
        }
        assert!(s.is_normalized(1e-12));
    }

    #[test]
    fn initial_state_triangle() {
        let (p, basis) = setup(3, &[]);
        let s = uniform_initial_state(&p, &basis).unwrap();
        assert_eq!(basis.len(), 6);
        for a in s.amplitudes() {
            assert!((a - 1.0 / 6.0f64.sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn initial_measurement_is_uniform() {
        for n in [3usize, 6, 11] {
            let (p, basis) = setup(n, &[0]);
            let s = uniform_initial_state(&p, &basis).unwrap();
            let d = s.measure_x();
            for x in 0..n {
                assert!((d.prob(x) - 1.0 / n as f64).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn basis_state_measures_at_its_tail() {
        let (_, basis) = setup(6, &[]);
        let s = EdgeState::<f64>::basis_state(basis, 2, 3).unwrap();
        let d = s.measure_x();
        assert_eq!(*d.prob(2), 1.0);
        assert_eq!(*d.prob(3), 0.0);
    }

    #[test]
    fn mismatched_basis_is_an_error() {
        let (p, _) = setup(6, &[]);
        let g5 = Graph::cycle(5).unwrap();
        let basis5 = Arc::new(EdgeBasis::new(&g5, &MarkedSet::empty(5)).unwrap());
        assert!(matches!(
            uniform_initial_state(&p, &basis5),
            Err(Error::BasisMismatch(_))
        ));
    }
}
