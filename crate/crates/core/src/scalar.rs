//! Scalar traits shared by the exact and floating-point routines.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// Coefficient ring for exact matrices and polynomials.
///
/// Only ring operations are needed by the division-free routines. Exact
/// division (`/`) is used where a quotient is known to be exact, so integer
/// types such as `i64`, `i128` and `BigInt` all qualify.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

/// Floating-point type used for spectral radius estimates.
pub trait Real: num_traits::Float + Debug {}

impl Real for f32 {}
impl Real for f64 {}
