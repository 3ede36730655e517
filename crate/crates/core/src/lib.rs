//! Exact Dehn-twist and rotation matrices on the Liechti-Strenner surfaces
//! `Σ_{2k,k}`, and verification that `Φ_k = r ∘ T_{c_1} ∘ r^{k-1}` leaves
//! invariant a block whose dilatation is the golden ratio.
//!
//! The linear algebra in [`linalg`] is generic over any [`Scalar`] ring; the
//! surface-specific code uses the arbitrary-precision aliases below.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod mapping_class;
pub mod scalar;
pub mod surface_model;
pub mod surface_topology;

pub use error::{Error, Result};
pub use linalg::{BlockStructure, Matrix, Polynomial};
pub use scalar::{Real, Scalar};

/// Matrix over arbitrary-precision integers.
pub type IntMatrix = Matrix<num_bigint::BigInt>;

/// Polynomial over arbitrary-precision integers.
pub type IntPolynomial = Polynomial<num_bigint::BigInt>;

/// Machine-integer variants, handy for small literals and tests.
pub type SmallMatrix = Matrix<i64>;
pub type SmallPolynomial = Polynomial<i64>;
