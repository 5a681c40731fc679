use thiserror::Error;

/// Errors surfaced by the analytic engine.
#[derive(Debug, Clone, Error)]
pub enum CoverageError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The refinement loop exhausted its budget before two successive
    /// estimates agreed to the requested relative tolerance. Carries the
    /// last two estimates so callers can judge how far apart they are.
    #[error(
        "quadrature did not converge: last estimates {previous} and {latest} \
         (relative tolerance {rel_tol})"
    )]
    QuadratureNotConverged {
        previous: f64,
        latest: f64,
        rel_tol: f64,
    },
}
