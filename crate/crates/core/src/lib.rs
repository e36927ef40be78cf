//! Exact primitive idempotents of Birman–Murakami–Wenzl algebras.
//!
//! The crate builds `BMW_n(q, nu)` over exact scalars, constructs the complete
//! system of pairwise-orthogonal primitive idempotents labelled by up-down
//! tableaux through consecutive evaluation of the fusion function, and checks
//! the results against an independent Jucys–Murphy projector construction, the
//! Hecke quotient and two classical contractions to the Brauer algebra.

pub mod error;
pub mod scalars;
pub mod combinatorics;
pub mod bmw;
pub mod brauer;
pub mod contraction;
pub mod fusion;
pub mod hecke;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};
