use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: degenerate line, both x and y coefficients are zero")]
    DegenerateLine { line: usize },
    #[error("line {second} duplicates line {first} after normalization")]
    DuplicateLine { first: usize, second: usize },
    #[error("arrangement has no lines")]
    EmptyArrangement,
    #[error("unknown built-in arrangement `{0}`")]
    UnknownName(String),
    #[error("arrangement has no singular point")]
    NoSingularPoint,
    #[error("subspace dimension {dim} exceeds the grid cap {cap}")]
    DimensionTooLarge { dim: usize, cap: usize },
    #[error("field is not of finite type (it is {0})")]
    InfiniteType(String),
    #[error("ambiguous classification")]
    AmbiguousClass,
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
