use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("singular point on {lattice} lattice at {point}")]
    SingularPoint { lattice: String, point: String },

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("singular matrix: no pivot in column {column}")]
    SingularMatrix { column: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("usage error: {0}")]
    Usage(String),
}
