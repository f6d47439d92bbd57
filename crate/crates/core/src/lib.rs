//! Exact analysis of distance matrices of distance-regular graphs.
//!
//! Given an intersection array `{b_0, ..., b_(d-1); c_1, ..., c_d}`, the
//! crate decides whether an element `X = sum_j x_j A_j` of the Bose-Mesner
//! algebra (by default the distance matrix `D = sum_j j A_j`) is invertible,
//! and if so writes `X^-1` both as a polynomial in the adjacency matrix and in
//! the distance basis `A_0, ..., A_d`. Everything is exact rational arithmetic.
//!
//! [`oracle`] builds concrete graphs and checks every result by brute force.

pub mod array;
pub mod coeffs;
pub mod enumerate;
pub mod exact;
pub mod inverse;
pub mod oracle;
pub mod spectra;
pub mod srg;

pub use array::{ArrayError, IntersectionArray, SrgError, SrgParams};
pub use coeffs::{distance_seed, CoefficientTable, SeedError};
pub use exact::{BigRational, RationalMatrix, RationalPolynomial};
pub use inverse::{analyze, analyze_distance, InvertibilityReport};
pub use spectra::{conjecture_check, conjecture_check_distance, ConjectureReport};
pub use srg::{srg_closed_form, SrgReport, Surd};
