use thiserror::Error;

/// Errors raised by constructors and checks across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what}: size {got} exceeds the supported maximum {max}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("ground sets differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("partition is not noncrossing: {0}")]
    Crossing(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid {kind}: {reason}")]
    InvalidObject { kind: &'static str, reason: String },
    #[error("not a cover relation: {0}")]
    NotACover(String),
    #[error("cover order is not total at {0}")]
    NotTotal(String),
    #[error("poset is not ranked: {0}")]
    NotRanked(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("homology is not concentrated in one degree: {0:?}")]
    NotConcentrated(Vec<usize>),
    #[error("series error: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, got: usize, max: usize) -> Result<()> {
    if got > max {
        Err(Error::SizeGuard { what, got, max })
    } else {
        Ok(())
    }
}

pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidObject {
        kind,
        reason: reason.into(),
    }
}
