use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),
    #[error("position {0} out of range for dimension {1}")]
    BadPosition(usize, u8),
    #[error("code is not a polybox code")]
    NotPolybox,
    #[error("code is not a cube tiling code")]
    NotTilingCode,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("no pairs available for expansion")]
    EmptySupply,
    #[error("blocks at index {0} are not equivalent")]
    BlocksNotEquivalent(usize),
    #[error("alphabet too small: need {need} pairs, have {have}")]
    AlphabetTooSmall { need: u8, have: u8 },
    #[error("words do not form a twin pair in this code")]
    NotTwinPair,
    #[error("word has no star at position {0}")]
    NoStarAtPosition(usize),
    #[error("cut would duplicate the word {0}")]
    DuplicateWord(String),
    #[error("input family already classified: duplicate canonical key {0}")]
    IncompleteInput(String),
    #[error("matrix profiles have different shapes")]
    ShapeMismatch,
    #[error("no path found within budget {0}")]
    NotFound(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
