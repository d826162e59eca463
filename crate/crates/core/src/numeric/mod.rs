//! Scalar backends and exact linear algebra over them: kernels, canonical
//! subspaces, intersections, complements, and float-only angle measures.

pub mod fvec;
pub mod rat;
pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::{signed_permutation_matrix, Matrix, MatrixKey};
pub use scalar::{Backend, Scalar, ScalarKey};
pub use subspace::{affine_span_dim, Subspace, SubspaceKey};

/// Default comparison tolerance for the float backend, fixed per analysis run.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
