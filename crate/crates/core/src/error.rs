use thiserror::Error;

/// Errors produced while building or applying a quadrature rule.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the supported domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The integrand returned a non-finite value.
    #[error("integrand is not finite at node {index} (x = {node}): {value}")]
    Evaluation { index: usize, node: f64, value: f64 },

    /// A moment was requested beyond the degree the rule integrates exactly.
    #[error("moment x^{degree} is beyond the exactness degree {max} of this rule")]
    OutOfExactness { degree: usize, max: usize },

    /// An iterative root solve failed to converge.
    #[error("root solve did not converge: {0}")]
    Convergence(String),

    /// A contour integral did not converge with the maximum number of samples.
    #[error("contour integral did not converge: {0}")]
    Contour(String),

    /// Any other numerical failure (eigen-solver, non-finite intermediate).
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("malformed rule data: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
