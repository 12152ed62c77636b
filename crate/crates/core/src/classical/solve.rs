//! Hitting times by solving the absorption equations directly.
//!
//! For an absorbing chain `P'` with marked set `m`, the expected absorption
//! times satisfy `t_v = 0` for marked `v` and `t_v = 1 + Σ_w P'_{vw} t_w`
//! otherwise. Run over `BigRational` this is an exact independent check on
//! every closed-form hitting-time expression; over `f64` it scales to large
//! instances.

use crate::error::{Error, Result};
use crate::graph::MarkedSet;
use crate::scalar::Scalar;
use crate::stochastic::{Distribution, StochasticMatrix};

/// Expected steps to absorption from each vertex (0 at marked vertices).
pub fn hitting_times_to_absorption<T: Scalar>(
    pprime: &StochasticMatrix<T>,
    marked: &MarkedSet,
) -> Result<Vec<T>> {
    let n = pprime.n();
    if marked.is_empty() {
        return Err(Error::EmptyMarkedSet);
    }
    for v in marked.iter() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !pprime.is_identity_row(v) {
            return Err(Error::InvalidMatrix(format!(
                "matrix is not absorbing at marked vertex {v}"
            )));
        }
    }

    // unknowns are the unmarked vertices; system (I - Q) t = 1
    let unmarked: Vec<usize> = (0..n).filter(|&v| !marked.contains(v)).collect();
    let mut pos = vec![usize::MAX; n];
    for (r, &v) in unmarked.iter().enumerate() {
        pos[v] = r;
    }
    let m = unmarked.len();
    let mut a: Vec<Vec<T>> = vec![vec![T::zero(); m + 1]; m];
    for (r, &v) in unmarked.iter().enumerate() {
        a[r][r] = T::one();
        a[r][m] = T::one();
        for (w, p) in pprime.row(v) {
            if !marked.contains(*w) {
                let c = pos[*w];
                a[r][c] = a[r][c].clone() - p.clone();
            }
        }
    }

    // Gaussian elimination with partial pivoting; zero entries are skipped so
    // banded systems (the cycle cut at its marked arc) stay O(n).
    for col in 0..m {
        let pivot_row = (col..m)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r1, &r2| {
                a[r1][col]
                    .abs()
                    .partial_cmp(&a[r2][col].abs())
                    .expect("comparable pivots")
            })
            .ok_or(Error::NoAbsorption)?;
        a.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for x in a[col][col..].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / pivot.clone();
            }
        }
        let pivot_row_vals = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, pv) in pivot_row_vals.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    row[c] = row[c].clone() - factor.clone() * pv.clone();
                }
            }
        }
    }

    let mut times = vec![T::zero(); n];
    for (r, &v) in unmarked.iter().enumerate() {
        times[v] = a[r][m].clone();
    }
    Ok(times)
}

/// Expected absorption time under a start distribution: `Σ_v start_v t_v`.
pub fn hitting_time_linear_solve<T: Scalar>(
    pprime: &StochasticMatrix<T>,
    marked: &MarkedSet,
    start: &Distribution<T>,
) -> Result<T> {
    if start.len() != pprime.n() {
        return Err(Error::Domain(format!(
            "start distribution has {} entries for a {}-state chain",
            start.len(),
            pprime.n()
        )));
    }
    let times = hitting_times_to_absorption(pprime, marked)?;
    Ok(times
        .into_iter()
        .zip(start.probs())
        .fold(T::zero(), |acc, (t, s)| acc + t * s.clone()))
}
