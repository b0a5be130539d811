use thiserror::Error;

use crate::partition::{Cell, Partition};

/// Errors raised by the combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("no cocorner in row {row} of {shape}")]
    NoCocornerInRow { shape: Partition, row: usize },
    #[error("no corner in row {row} of {shape}")]
    NoCornerInRow { shape: Partition, row: usize },
    #[error("{larger} does not cover {smaller}")]
    NotACover { larger: Partition, smaller: Partition },

    #[error("row lengths do not form a partition")]
    RaggedRows,
    #[error("hole at {0} is a corner; no slide possible")]
    HoleAtCorner(Cell),
    #[error("hole {0} lies outside the shape")]
    HoleOutsideShape(Cell),
    #[error("column {column} does not end in the letter {letter}")]
    MissingK { letter: String, column: usize },
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("tableau is not {n}-symplectic")]
    NotSymplectic { n: u32 },
    #[error("tableau is not a standardized symplectic tableau: {0}")]
    NotStandardized(String),
    #[error("multiplicity of {letter} in P is {found}, expected {expected}")]
    CountMismatch {
        letter: String,
        found: usize,
        expected: usize,
    },

    #[error("letter {letter} exceeds the alphabet bound n={n}")]
    LetterOutOfRange { letter: String, n: u32 },
    #[error("cannot parse {0:?} as a letter")]
    BadLetter(String),
    #[error("shapes do not form an up-down tableau: {0}")]
    NotUpDown(String),

    #[error("no local rule applies: {0}")]
    InvalidConfiguration(String),
    #[error("right edge is malformed: {0}")]
    MalformedEdge(String),
    #[error("hypothetical row rejected: {0}")]
    RowRejected(String),

    #[error("the empty pair has no last step")]
    EmptyWord,
    #[error("invalid (P,Q) pair: {0}")]
    InvalidPair(String),
    #[error("shape {shape} has more than {n} rows")]
    ShapeTooLong { shape: Partition, n: u32 },
    #[error("{words} words exceed the exhaustion limit {limit}")]
    ScopeTooLarge { words: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
