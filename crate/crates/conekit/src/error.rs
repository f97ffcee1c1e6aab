use thiserror::Error;

/// Errors surfaced by the norm computations, cone algorithms and solvers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("dimension too large: {0}")]
    DimensionTooLarge(String),
    #[error("matrix is not a Lorentz automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map is not in the interior of the positive cone: {0}")]
    NotInterior(String),
    #[error("iteration did not converge within {0} steps")]
    NoConvergence(usize),
    #[error("map is not positive")]
    NotPositive,
    #[error("subspace touches the Lorentz cone only at the origin")]
    DegenerateIntersection,
    #[error("the vector w must satisfy ||w||_2 < 1")]
    InvalidW,
    #[error("solver failed: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;
