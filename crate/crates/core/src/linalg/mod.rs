//! Exact arithmetic substrate: rational matrices, integer polynomials,
//! fraction-free determinants and cyclotomic polynomials.

mod cyclotomic;
mod interp;
mod matrix;
mod poly;

pub use cyclotomic::{cyclotomic, divisors, totient, totient_candidates};
pub use interp::{
    charpoly_interpolated, det_interpolated_at, newton_interpolate, symmetric_points, PolyMatrix,
};
pub use matrix::{fraction_string, ExactMatrix, ExactScalar};
pub use poly::{Coefficient, IntPolynomial, Polynomial, RatPolynomial};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("interpolated determinant has a non-integer coefficient")]
    NonIntegerCoefficient,
}
