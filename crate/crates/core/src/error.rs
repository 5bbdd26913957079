use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("mismatched delta contexts")]
    ContextMismatch,
    #[error("element has zero norm and is not invertible")]
    ZeroNorm,
    #[error("sequence not q-adically convergent at order {0}")]
    NotConvergent(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid braid: {0}")]
    Braid(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parity violation: {0}")]
    Parity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
