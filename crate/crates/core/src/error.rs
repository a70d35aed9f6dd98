use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: vertex {vertex:?} repeated within an edge")]
    DuplicateVertex { line: usize, vertex: String },

    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    #[error("edges {first} and {second} share {shared} vertices")]
    NotLinear {
        first: usize,
        second: usize,
        shared: usize,
    },

    #[error("hypergraph is not in standard form: {0}")]
    NotStandardForm(String),

    #[error("cannot uniformize: {0}")]
    Uniformize(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("random generation failed: edge {edge} rejected {attempts} times")]
    GenerationFailed { edge: usize, attempts: usize },

    #[error("identifier trees do not match the hypergraph: {0}")]
    InvalidTrees(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("auxiliary graph has the wrong kind for this operation")]
    WrongKind,

    #[error("{0} is not a supported prime")]
    NotPrime(u64),

    #[error("field of characteristic {actual} cannot host P1 for n={n}")]
    FieldMismatch { n: usize, actual: u64 },

    #[error("point has {actual} coordinates, expected {expected}")]
    PointSize { expected: usize, actual: usize },

    #[error("expansion needs about {estimate} terms, bound is {bound}")]
    Infeasible { estimate: u128, bound: u128 },

    #[error("target has total degree {actual}, maximal degree is {expected}")]
    NonMaximalTarget { actual: u64, expected: u64 },

    #[error("grid does not fit the degrees: {0}")]
    GridMismatch(String),

    #[error("grid for variable {var} repeats an element")]
    ZeroDenominator { var: usize },

    #[error("orientation is not Vandermonde-completable")]
    NotCompletable,

    #[error("vertex {0:?} is not colored")]
    PartialColoring(String),

    #[error("no free color for vertex {0:?}")]
    NoFreeColor(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
