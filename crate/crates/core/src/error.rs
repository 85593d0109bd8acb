use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exhaustive bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("iteration cap of {0} steps reached")]
    IterationCap(usize),

    /// A random specialization landed in a closed bad locus too many times.
    #[error("degenerate specialization: {0}")]
    Degenerate(String),

    /// An internal identity failed; always a bug, never a property of the input.
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
