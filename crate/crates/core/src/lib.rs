//! Exact-arithmetic kernel for relative Poisson algebras and their
//! bialgebras: axiom checkers, representations, Manin triples, coboundary
//! bialgebras from Yang-Baxter solutions, O-operators, and the passage from
//! relative pre-Poisson algebras to Frobenius Jacobi algebras.
//!
//! Every structure is a finite-dimensional space with a fixed labeled basis
//! and dense rational structure constants.

pub mod algebra;
pub mod catalog;
pub mod coalgebra;
pub mod error;
pub mod jacobi;
pub mod linear;
pub mod pairing;
pub mod pre_poisson;
pub mod rep;
pub mod report;
pub mod yang_baxter;

pub use error::Error;
pub use linear::{Matrix, Scalar, Space};
pub use report::{AxiomReport, Violation};
