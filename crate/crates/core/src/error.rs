use thiserror::Error;

/// Why an adjacency matrix falls outside the domain of a transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainFailure {
    /// `CΓ + D` is singular.
    SingularDenominator,
    /// The image would have a nonzero diagonal entry.
    NonzeroDiagonal,
}

impl std::fmt::Display for DomainFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainFailure::SingularDenominator => f.write_str("singular denominator"),
            DomainFailure::NonzeroDiagonal => f.write_str("nonzero diagonal in image"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    /// Vertices are reported 0-based; front ends translate.
    #[error("{{{i}, {j}}} is not an edge")]
    NotAnEdge { i: usize, j: usize },

    #[error("replay failed at step {step}: {{{i}, {j}}} is not an edge of the current graph")]
    IllegalMove { step: usize, i: usize, j: usize },

    #[error("not in domain: {0}")]
    NotInDomain(DomainFailure),

    #[error("diagonal entries must satisfy ad + bc = 1 (violated at vertex {vertex})")]
    NotInvertibleBlock { vertex: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("adjacency matrix is not symmetric at ({i}, {j})")]
    SymmetryViolation { i: usize, j: usize },

    #[error("adjacency matrix has a nonzero diagonal entry at {i}")]
    DiagonalViolation { i: usize },

    #[error("invalid size {size} for {kind}")]
    InvalidSize { kind: &'static str, size: usize },

    #[error("{n} vertices exceeds the limit of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("integer overflow")]
    Overflow,

    #[error("orbit exceeds cap {cap} (partial size {partial})")]
    CapExceeded { cap: usize, partial: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
