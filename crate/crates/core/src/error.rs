use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid transposition ({0} {1}) on {2} points")]
    InvalidTransposition(usize, usize, usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("generator set contains a non-transposition")]
    NotATransposition,

    #[error("letter {letter} outside alphabet of size {alphabet}")]
    LetterOutOfRange { letter: i32, alphabet: usize },

    #[error("relator reduces to the empty word")]
    TrivialRelator,

    #[error("search bound {bound} is shorter than target length {len}")]
    BoundTooSmall { bound: usize, len: usize },

    #[error("unsupported grid {rows}x{cols}: both dimensions must be at least 3")]
    UnsupportedGrid { rows: usize, cols: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("corrupt fixture: {0}")]
    CorruptFixture(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} has degree {1}; fork relators need degree at most 3")]
    NotCubic(usize, usize),

    #[error("cycle must have at least 3 edges, got {0}")]
    CycleTooShort(usize),

    #[error("edge {0} is not in the graph")]
    UnknownEdge(usize),

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("{0}")]
    Fixture(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
