//! Exact analysis of Grover walk periodicity on finite simple graphs.
//!
//! - [`graph`]: graphs, parsers, generators, structure classes, canonical forms.
//! - [`linalg`]: exact rational matrices and integer polynomials.
//! - [`grover`]: the transfer matrix `U`, transition matrix `T` and `det(xI - U)`.
//! - [`periodicity`]: exact period detection and a matrix-power oracle.
//! - [`census`]: exhaustive small-graph classification and theorem checks.
//! - [`walk`]: floating-point state evolution.
//!
//! ```
//! use grover_core::graph::Family;
//! use grover_core::grover::GroverOperator;
//! use grover_core::periodicity::detect_period;
//!
//! let op = GroverOperator::new(Family::Cycle(5).build().unwrap());
//! assert_eq!(detect_period(&op).unwrap().period(), Some(5));
//! ```

pub mod census;
pub mod exec;
pub mod graph;
pub mod grover;
pub mod linalg;
pub mod periodicity;
pub mod walk;

pub use exec::Execution;
