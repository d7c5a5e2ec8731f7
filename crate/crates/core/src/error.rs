use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed header, expected \"m n\"")]
    BadHeader,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("illegal character {0:?}")]
    IllegalCharacter(char),
    #[error("row total {rows} differs from column total {cols}")]
    TotalMismatch { rows: u64, cols: u64 },
    #[error("margin out of range: {0}")]
    OutOfRange(String),
    #[error("index set does not match the matrix side")]
    SideMismatch,
    #[error("partial matrix violates the margins: {0}")]
    InconsistentPartial(String),
    #[error("not a defining set")]
    NotDefining,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("class has {count} members, more than the cap {cap}")]
    ClassTooLarge { count: String, cap: u64 },
    #[error("class is empty")]
    EmptyClass,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("invalid permutation")]
    InvalidPermutation,
}

pub type Result<T> = std::result::Result<T, Error>;
