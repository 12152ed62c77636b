//! Scalar abstraction so the matrix and solver code runs over `f64` as well
//! as exact rationals.
//!
//! Everything that only needs field arithmetic is generic over [`Scalar`];
//! the quantum-walk state code additionally needs square roots and is bound
//! by [`RealScalar`]. Concrete aliases live at the crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive};

/// Field scalar: probabilities, matrix entries, hitting times.
///
/// Implemented (via the blanket impl) by `f32`, `f64` and
/// [`num::BigRational`].
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + 'static
{
}

/// Floating-point scalar for amplitude dynamics (`f32`, `f64`).
pub trait RealScalar: Scalar + Float {}

impl<T> RealScalar for T where T: Scalar + Float {}

/// Exact `num / den` in the target scalar (exact for rationals, one rounding
/// for floats).
pub fn ratio_of<T: Scalar>(num: usize, den: usize) -> T {
    debug_assert!(den != 0);
    T::from_usize(num).expect("scalar from usize") / T::from_usize(den).expect("scalar from usize")
}

pub fn from_usize<T: Scalar>(v: usize) -> T {
    T::from_usize(v).expect("scalar from usize")
}

/// Lossy view used for tolerance checks on exact types.
pub fn to_f64<T: Scalar>(v: &T) -> f64 {
    v.to_f64().expect("scalar to f64")
}
