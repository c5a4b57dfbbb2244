use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A multi-index component or flat index fell outside its range.
    #[error("index out of range: {0}")]
    Index(String),

    /// Matrix dimension, subsystem dimensions, or mask length do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An input violated an operation's precondition (non-Hermitian, trace != 1, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// The eigensolver ran out of its iteration budget.
    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    /// Two evaluations of the same quantity disagreed beyond tolerance.
    #[error("numerical inconsistency: {0}")]
    Numerical(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// Malformed matrix file.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
