use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("undeclared endpoint `{0}`")]
    UndeclaredEndpoint(String),
    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid neutrosophic number `{0}`")]
    InvalidNumber(String),
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("walk of length zero has no classification")]
    EmptyWalk,
    #[error("{what} too large for exact search: {size} exceeds cap {cap}")]
    TooLarge { what: &'static str, size: String, cap: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("subgraphs belong to different host graphs")]
    HostMismatch,
    #[error("subset vertex graphs are over different base sets")]
    BaseMismatch,
    #[error("invalid subset vertex: {0}")]
    InvalidSubset(String),
    #[error("k must be at least 1")]
    ZeroPower,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn too_large(what: &'static str, size: impl ToString, cap: impl ToString) -> Error {
    Error::TooLarge { what, size: size.to_string(), cap: cap.to_string() }
}
