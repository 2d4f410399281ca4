use thiserror::Error;

/// Errors raised by the numerical kernels and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument or parameter lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series term exceeded the overflow guard before the sum settled.
    #[error("convergence error: {what} (term {term}, log-magnitude {log_magnitude:.3} > guard {guard})")]
    Convergence {
        what: String,
        term: usize,
        log_magnitude: f64,
        guard: f64,
    },
    /// The integrand produced a non-finite value at a quadrature node.
    #[error("quadrature error: {0}")]
    Quadrature(String),
    /// The Volterra recurrence hit a degenerate pivot.
    #[error("solver error: {0}")]
    Solver(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
