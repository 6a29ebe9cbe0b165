use thiserror::Error;

/// Errors raised by the algebra kernel and the verification checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid modulus {0}: must be 0 (integers) or at least 2")]
    InvalidModulus(u64),

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("elements belong to different algebra contexts")]
    ContextMismatch,

    #[error("ambient mismatch: expected (n={expected_n}, k={expected_k}), found (n={found_n}, k={found_k})")]
    AmbientMismatch {
        expected_n: u32,
        expected_k: u32,
        found_n: u32,
        found_k: u32,
    },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("element is not homogeneous of degree {0}")]
    Inhomogeneous(usize),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("outside the hypothesis of the check: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: impl TryInto<i64>, expected: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            expected: expected.into(),
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
