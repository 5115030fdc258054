use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("size guard exceeded for {what}: {size} > {limit}")]
    SizeGuard {
        what: &'static str,
        size: String,
        limit: String,
    },

    #[error("index {index} out of range (order {order})")]
    OutOfRange { index: usize, order: usize },

    #[error("not a partial order: {axiom} fails at {witness}")]
    NotPoset { axiom: &'static str, witness: String },

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: String, b: String },

    #[error("infinite family: {0}")]
    Infinite(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn guard(what: &'static str, size: impl ToString, limit: impl ToString) -> Self {
        Error::SizeGuard {
            what,
            size: size.to_string(),
            limit: limit.to_string(),
        }
    }
}
