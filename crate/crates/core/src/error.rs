use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three classes (see [`ErrorClass`]): bad input,
/// exhausted resource caps, and internal consistency failures. The last
/// class means a proven identity did not hold, which is always a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidType {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{what} exceeded the cap of {cap}")]
    ResourceLimit { what: &'static str, cap: usize },
    #[error("internal consistency failure: {0}")]
    TheoremViolation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Resource,
    Violation,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::ResourceLimit { .. } => ErrorClass::Resource,
            Error::TheoremViolation(_) => ErrorClass::Violation,
            _ => ErrorClass::Usage,
        }
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
