use thiserror::Error;

/// Errors returned by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index argument lies outside its admissible range.
    #[error("{what} = {value} out of range (max {max})")]
    Range {
        what: &'static str,
        value: usize,
        max: usize,
    },
    /// An argument violates a structural precondition (odd `n`, wrong parameter length, ...).
    #[error("{0}")]
    Domain(String),
    /// The request exceeds a configured size limit.
    #[error("n = {n} exceeds the limit of {limit} variables")]
    Capacity { n: usize, limit: usize },
    /// A bitstring could not be parsed.
    #[error("malformed bitstring: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn require_even(n: usize) -> Result<usize> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(domain(format!("n = {n} must be a positive even integer")));
    }
    Ok(n / 2)
}
