use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} (parts must be positive and weakly decreasing)")]
    InvalidPartition(Vec<usize>),
    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("not a standard word: {0:?}")]
    NotStandard(Vec<u32>),
    #[error("not a cocharge labeling: {0:?}")]
    InvalidLabeling(Vec<u32>),
    #[error("invalid tableau rows: {0:?}")]
    InvalidTableau(Vec<Vec<u32>>),
    #[error("position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("index {0} exceeds the word length")]
    IndexOutOfRange(i64),
    #[error("empty word")]
    EmptyWord,
    #[error("the letter 1 cannot be rotated or corotated")]
    RotatesOne,
    #[error("cannot remove {m} cells from a first row of length {row_len}")]
    PrefixTooLong { m: usize, row_len: usize },
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("bad token {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
