use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no value assigned to variable x{0}")]
    MissingAssignment(u32),

    #[error("invalid partition symbol: {0}")]
    InvalidSymbol(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
