use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid arc diagram: {0}")]
    InvalidDiagram(String),
    #[error("query not supported for this diagram class: {0}")]
    IncompatibleQuery(String),
    #[error("invalid tableau sequence: {0}")]
    InvalidSequence(String),
    #[error("shape of height {height} does not fit in dimension {k}")]
    HeightOverflow { height: usize, k: usize },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("index {index} out of range 1..={n}")]
    OutOfRange { index: usize, n: usize },
    #[error("duplicate entry {0} in tableau")]
    DuplicateEntry(u32),
    #[error("no filling exists: {0}")]
    NoFilling(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown generating-tree rule `{0}`")]
    UnknownRule(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
