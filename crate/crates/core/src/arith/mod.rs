//! Exact arithmetic and dense/sparse exact linear algebra.

mod dense;
mod scalar;
pub mod sparse;

pub use dense::{kernel_basis, rref, subspace_dim_sum, DenseMatrix, RrefResult};
pub use scalar::{rational, Domain, Field, Fp, Rational, PRIME};
