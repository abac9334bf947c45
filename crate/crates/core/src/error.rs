use thiserror::Error;

/// Errors surfaced by the numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// An input parameter is outside the admissible range.
    #[error("domain error: {0}")]
    Domain(String),

    /// Fields defined on incompatible grids were combined.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// An iterative method ran out of iterations.
    #[error("{what} failed to converge after {iterations} iterations (residual {residual:.3e})")]
    Iteration {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },

    /// A direct linear solve broke down.
    #[error("singular linear system in {0}")]
    SingularSystem(&'static str),

    /// The dense eigensolver did not converge.
    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    /// A numerical certification that the rest of the pipeline relies on
    /// did not hold.
    #[error("certification failure: {what} (measured {measured:.6e}, required {required:.6e})")]
    Certification {
        what: String,
        measured: f64,
        required: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
