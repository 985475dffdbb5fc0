use thiserror::Error;

/// Errors reported by the solvers, encoders and parsers of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configured enumeration or search cap was hit before an answer was found.
    /// This is not an infeasibility verdict.
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    /// The instance is too large for the requested exact method.
    #[error("instance too large for {0}")]
    TooLarge(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
