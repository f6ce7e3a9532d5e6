use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty permutation")]
    Empty,
    #[error("not a bijection on [1..{n}]: {detail}")]
    NotABijection { n: usize, detail: String },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("inflation expects {expected} parts, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("poset already has a bottom element")]
    AlreadyClosed,
    #[error("operation requires the closed poset (with bottom element)")]
    MissingBottom,
    #[error("{0} is not an element of this poset")]
    NotAnElement(String),
    #[error("poset is not a lattice")]
    NotALattice,
    #[error("element {element} has parents at different depths")]
    DepthConflict { element: String },
    #[error("not an interval poset: {0}")]
    NotAnIntervalPoset(String),
    #[error("not a binary tree poset: {0}")]
    NotBinaryTree(String),
    #[error("malformed poset file: {0}")]
    InvalidPosetFile(String),
    #[error("internal verification failed: {0}")]
    VerificationFailure(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
