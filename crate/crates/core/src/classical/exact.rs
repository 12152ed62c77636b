//! Closed-form hitting-time expressions for the simple random walk on a
//! cycle with one marked vertex (and the clustered generalization).
//!
//! With the walker at ring distance `i` from the single marked vertex of an
//! `L`-cycle, the expected time to get one step closer is `h_i = L - 2i + 1`
//! (same expression for even and odd `L`), the expected absorption time is
//! `H_i = i (L - i)`, and averaging over a uniform start gives
//! `(L^2 - 1) / 6`.

use num::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{from_usize, Scalar};

fn check_distance(l: usize, i: usize, min_i: usize) -> Result<()> {
    if l < 3 {
        return Err(Error::Domain(format!("cycle length {l} below minimum 3")));
    }
    if i < min_i || i > l / 2 {
        return Err(Error::Domain(format!(
            "distance {i} outside [{min_i}, {}] for cycle length {l}",
            l / 2
        )));
    }
    Ok(())
}

/// Expected steps to move one step closer to the marked vertex from ring
/// distance `i` on an `L`-cycle: `L - 2i + 1`.
pub fn h_step_expectation<T: Scalar>(l: usize, i: usize) -> Result<T> {
    check_distance(l, i, 1)?;
    Ok(from_usize(l - 2 * i + 1))
}

/// Expected absorption time from ring distance `i`: `i (L - i)`.
pub fn hitting_from_distance<T: Scalar>(l: usize, i: usize) -> Result<T> {
    check_distance(l, i, 0)?;
    Ok(from_usize(i * (l - i)))
}

/// Hitting time of the `L`-cycle with a single marked vertex and uniform
/// start: `(L^2 - 1) / 6`, exactly.
///
/// `L = 1` gives 0 (the walker starts on the marked vertex) and `L = 2`
/// gives 1/2 by the formula; a 2-cycle has no simple-graph realization but
/// the value is kept so the clustered expression below stays total for
/// `k = N - 1`.
pub fn hitting_time_exact_cycle(l: usize) -> BigRational {
    let l = BigRational::from_integer(l.into());
    (l.clone() * l - BigRational::from_integer(1.into()))
        / BigRational::from_integer(6.into())
}

/// Hitting time of an `N`-cycle with a contiguous arc of `k` marked
/// vertices, uniform start: `(N-k)(N-k+1)(N-k+2) / (6N)`.
///
/// The unmarked segment behaves like a cycle of length `L = N - k + 1` with
/// one marked vertex; summing `H_i = i (L - i)` over the `N - k` unmarked
/// starts and dividing by `N` (marked starts contribute 0) gives the cubic.
pub fn clustered_hitting_time_exact(n: usize, k: usize) -> Result<BigRational> {
    if k == 0 || k >= n {
        return Err(Error::Domain(format!(
            "cluster size k={k} must satisfy 1 <= k < N={n}"
        )));
    }
    let big = |v: usize| BigRational::from_integer(v.into());
    Ok(big(n - k) * big(n - k + 1) * big(n - k + 2) / (big(6) * big(n)))
}

/// Partial sum of Oresme's series `Σ i / 2^i` (limit 2), which also gives
/// the farthest-point step expectation on odd cycles.
pub fn oresme_partial_sum(terms: usize) -> f64 {
    (1..=terms).map(|i| i as f64 / (2.0f64).powi(i as i32)).sum()
}
