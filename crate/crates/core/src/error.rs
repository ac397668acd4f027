use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on values (not shapes) was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// Ambient dimensions, grades or matrix shapes do not fit together.
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range (expected < {bound})")]
    Range { index: usize, bound: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("refusing Leibniz expansion of size {n} (limit {limit}); use --force")]
    Complexity { n: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn dim_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Dimension(msg.into()))
}

pub(crate) fn domain_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
