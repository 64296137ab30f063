//! Spectral machinery for linear recurrent sequences, Markov chains and
//! directed graphs: explicit Vandermonde inversion, closed-form recurrence
//! solving, eigenvalue-based convergence bounds for Markov chains, and
//! spectral upper bounds on digraph diameters.
//!
//! The library is organized around six modules:
//!
//! - [`numkernel`]: complex polynomials, elementary symmetric polynomials,
//!   simultaneous root finding.
//! - [`vandermonde`]: the power-1..n Vandermonde matrix, its closed-form
//!   determinant and inverse.
//! - [`recurrence`]: direct iteration and closed forms x_n = Σ c_i λ_i^n.
//! - [`spectral`]: characteristic polynomials, eigenvalues, and closed
//!   forms for matrix-power entries.
//! - [`markov`]: chain structure, stationary distributions, and the
//!   convergence constants Φ and Ψ.
//! - [`graphs`]: digraphs, Markov-matrix constructions, exact and spectral
//!   diameter bounds.
//!
//! The [`cli`] module exposes all of it as a command-line tool emitting
//! deterministic JSON reports.

// Dense kernels index several grids by the same loop variable; iterator
// rewrites obscure them.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod graphs;
pub mod io;
pub mod markov;
pub mod numkernel;
pub mod recurrence;
pub mod report;
pub mod spectral;
pub mod vandermonde;

pub use error::{Error, HypothesisError, NumericalError, Result};
pub use num_complex::Complex64;
