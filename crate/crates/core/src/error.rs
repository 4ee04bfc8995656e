use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{what}: size {n} exceeds the limit {limit}")]
    ResourceLimit { what: &'static str, n: usize, limit: usize },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects `n` above `limit` for the named routine.
pub fn check_size(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::ResourceLimit { what, n, limit })
    } else {
        Ok(())
    }
}
