//! Crate-wide error type.

/// Errors produced anywhere in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {max_dev:.3e} exceeds {tol:.3e}")]
    NotHermitian { max_dev: f64, tol: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid Schatten exponent p = {0}; require p >= 1")]
    InvalidExponent(f64),

    #[error("eigensolver failure: {0}")]
    EigenFailure(String),

    #[error("confluent zero node beyond regularity: {0}")]
    ZeroNodeRegularity(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that reflect bad numerical inputs rather than bad
    /// usage (the CLI maps these to its own exit-code class).
    pub fn is_numerical_domain(&self) -> bool {
        matches!(
            self,
            Error::NotHermitian { .. }
                | Error::InvalidExponent(_)
                | Error::EigenFailure(_)
                | Error::ZeroNodeRegularity(_)
                | Error::Domain(_)
                | Error::Precondition(_)
        )
    }
}
