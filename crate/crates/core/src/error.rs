use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid restricted growth function: {0}")]
    InvalidRgf(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("empty input is not allowed for {0}")]
    Empty(&'static str),

    #[error("element {element} lies outside [1, {n}]")]
    OutOfRange { element: usize, n: usize },

    #[error("n = {n} exceeds the enumeration limit of {limit}")]
    Capacity { n: usize, limit: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unsupported pattern set {got}; supported: {supported}")]
    UnsupportedPatterns { got: String, supported: String },

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("word {word} is outside the domain of {map}: {reason}")]
    Domain {
        map: &'static str,
        word: String,
        reason: &'static str,
    },

    #[error("unknown id {0:?}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
