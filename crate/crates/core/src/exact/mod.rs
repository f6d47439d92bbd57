//! Exact rational linear algebra: scalars, dense matrices, polynomials.

pub mod matrix;
pub mod poly;
pub mod rational;

pub use matrix::{det_exact, invert_exact, poly_of_matrix, Inversion, MatrixError, MatrixPowers, RationalMatrix};
pub use num_rational::BigRational;
pub use poly::RationalPolynomial;
pub use rational::{format_rational, frac, parse_rational, parse_rational_list, rat, ParseRationalError};
