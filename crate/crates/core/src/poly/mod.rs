//! Homogeneous polynomials in three variables, their bases and multiplication maps.

mod homogeneous;
mod matrix;
mod monomial;
mod parse;

pub use homogeneous::{HomogeneousPoly, SyzygyVector};
pub use matrix::multiplication_matrix;
pub use monomial::{dim_s, Monomial, MonomialBasis};
pub use parse::parse_poly;
