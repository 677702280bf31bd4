use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid quiver: {0}")]
    Quiver(String),

    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),

    #[error("saturation bound {0} exceeded: relations do not kill all long paths")]
    Saturation(usize),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid morphism: {0}")]
    InvalidMap(String),

    #[error("not a short exact sequence: {0}")]
    InvalidSequence(String),

    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("isomorphism undetermined: {0}")]
    IsoUndetermined(String),

    #[error("search depth {0} exceeded")]
    DepthExceeded(usize),

    #[error("approximation is not surjective at step {0}")]
    NotSurjective(usize),

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
