use thiserror::Error;

/// Errors raised by the structural types of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("partition parts must be non-negative and weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("malformed triangle: row {row} has {found} entries, expected {expected}")]
    MalformedTriangle { row: usize, found: usize, expected: usize },
    #[error("matrix data length {len} does not match {rows}x{cols}")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("inadmissible weight at ({row}, {col})")]
    InadmissibleWeight { row: usize, col: usize },
    #[error("inadmissible word entry at letter {letter}")]
    InadmissibleWord { letter: usize },
    #[error("path query: {0}")]
    PathQuery(String),
    #[error("brute-force oracle limited to {max} cells, got {cells}")]
    TooLarge { cells: usize, max: usize },
}
