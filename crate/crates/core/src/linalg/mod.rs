//! Exact linear algebra over integer-like rings.

mod charpoly;
mod matrix;
mod poly;
mod scc;
mod spectral;

pub use charpoly::char_poly;
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use scc::{scc_blocks, BlockStructure};
pub use spectral::dominant_eigenvalue;
