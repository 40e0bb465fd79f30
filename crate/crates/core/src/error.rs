use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval endpoints must differ (a = b = {0})")]
    DegenerateInterval(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degree {m} does not divide deg P = {n}")]
    NonDivisorDegree { m: usize, n: usize },

    #[error("polynomial of degree {found:?} is too small; need degree >= {required}")]
    DegreeTooSmall { found: Option<usize>, required: usize },

    #[error("cannot expand in powers of a constant polynomial")]
    ConstantBase,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid multi-index: {0}")]
    InvalidMultiIndex(String),
}

pub type Result<T> = std::result::Result<T, Error>;
