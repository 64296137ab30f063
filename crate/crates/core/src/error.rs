use num_complex::Complex64;
use thiserror::Error;

/// A theorem precondition the input failed to meet.
///
/// These are not bugs or bad arguments: the input was well formed, but the
/// closed-form machinery does not apply to it. The CLI maps them to exit
/// code 3 and still emits a report with `hypothesis_ok = false`.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypothesisError {
    /// A Vandermonde node is (numerically) zero, so the matrix is singular.
    #[error(
        "singular: zero node (smallest modulus {abs_min:.3e} is below threshold {threshold:.3e})"
    )]
    ZeroNode { abs_min: f64, threshold: f64 },
    /// Two Vandermonde nodes are too close for the closed-form denominators.
    #[error("ill-conditioned: node separation below threshold (sep_min {sep_min:.3e}, threshold {threshold:.3e})")]
    NodeSeparation { sep_min: f64, threshold: f64 },
    /// The support digraph of the chain is not strongly connected.
    #[error("not irreducible: the support digraph is not strongly connected")]
    Reducible,
    /// The chain is periodic, so it has no limiting distribution.
    #[error("not aperiodic: the chain has period {period}")]
    Periodic { period: u64 },
    /// The spectrum has a repeated (or numerically coincident) eigenvalue.
    #[error(
        "repeated eigenvalue: smallest separation {sep_min:.3e} is below threshold {threshold:.3e}"
    )]
    RepeatedEigenvalue { sep_min: f64, threshold: f64 },
    /// The spectrum has a zero (or numerically vanishing) eigenvalue.
    #[error("zero eigenvalue: smallest modulus {abs_min:.3e} is below threshold {threshold:.3e}")]
    ZeroEigenvalue { abs_min: f64, threshold: f64 },
}

/// A numerical routine could not produce a trustworthy answer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericalError {
    /// The simultaneous root iteration hit its iteration cap. Carries the
    /// best iterate found and its scaled residual.
    #[error("root finding did not converge after {iterations} iterations (worst scaled residual {residual:.3e})")]
    RootsDidNotConverge {
        iterations: u32,
        residual: f64,
        best: Vec<Complex64>,
    },
    /// Pivoted elimination produced an unusable solution.
    #[error("singular or ill-conditioned linear system (residual {residual:.3e})")]
    SingularSystem { residual: f64 },
    /// A solved closed form failed to reproduce the sequence it came from.
    #[error("closed form does not reproduce the sequence (relative residual {residual:.3e} exceeds tolerance {tolerance:.3e})")]
    ClosedFormMismatch { residual: f64, tolerance: f64 },
    /// A stochastic matrix whose computed dominant eigenvalue is not 1.
    #[error("dominant eigenvalue is not 1 (distance {distance:.3e}); the matrix may not be stochastic to working precision")]
    DominantNotOne { distance: f64 },
    /// A subdominant eigenvalue of an aperiodic irreducible chain reached
    /// modulus 1, which the convergence bounds cannot absorb.
    #[error("subdominant eigenvalue modulus {rho} is not below 1")]
    SubdominantNotContracting { rho: f64 },
    /// The stationary solve returned a non-positive probability.
    #[error("stationary distribution entry {index} is non-positive ({value:.3e})")]
    StationaryNotPositive { index: usize, value: f64 },
    /// A closed-form evaluation left the finite double range.
    #[error("closed-form evaluation overflowed at term {term}")]
    EvaluationOverflow { term: usize },
}

/// Crate-wide error type. The three variants map onto the CLI exit codes:
/// input/validation problems (2), hypothesis failures (3), numerical
/// failures (4).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error(transparent)]
    Numerical(#[from] NumericalError),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
