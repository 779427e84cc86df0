//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate cloud: all pairwise distances are zero")]
    DegenerateCloud,

    #[error("unknown shape name: {0}")]
    UnknownShape(String),

    #[error("dimension exceeds vertex count: K={k_max} needs at least {} vertices, got {n}", k_max + 1)]
    DimensionExceedsVertices { k_max: usize, n: usize },

    #[error("eigensolver failed to converge: {0}")]
    EigenFailure(String),

    #[error("incomparable state spaces: {0}")]
    IncomparableStates(String),

    #[error("incomparable feature sets: {0}")]
    IncomparableFeatures(String),

    #[error("singular system: {0}")]
    SingularSystem(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("malformed data: {0}")]
    Malformed(String),
}
