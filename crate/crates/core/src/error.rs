use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("entry at ({row}, {col}) is not 0 or 1")]
    BadEntry { row: usize, col: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("invalid sparse matrix: {0}")]
    InvalidSparse(String),
    #[error("not a monomial matrix: {0}")]
    NotMonomial(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("block of size {k} at offset {offset} does not fit in order {n}")]
    BlockOutOfRange { k: usize, n: usize, offset: usize },
    #[error("{what} is out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("dense input of order {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
