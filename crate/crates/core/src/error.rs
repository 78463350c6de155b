use thiserror::Error;

/// Errors produced by diagram construction, enumeration and the classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge between {u} and {v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {u}-{v} has multiplicity 0")]
    ZeroMultiplicity { u: usize, v: usize },

    #[error("edge {u}-{v} has even multiplicity {multiplicity} but no direction")]
    UndirectedEvenEdge { u: usize, v: usize, multiplicity: u32 },

    #[error("vertex {vertex} out of range for a diagram with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("diagrams are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("labeling has length {found}, diagram has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },

    #[error("pinned vertex {vertex} must carry label 1")]
    PinnedVertexCleared { vertex: usize },

    #[error("invalid labeling string {0:?}")]
    InvalidBitstring(String),

    #[error("state space of {free} free vertices ({states} labelings) exceeds the cap of {cap} free vertices")]
    StateSpaceTooLarge { free: usize, cap: usize, states: u128 },

    #[error("nullspace dimension {dim} exceeds the enumeration cap {cap}")]
    NullspaceTooLarge { dim: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{family} parameter {param} out of range: {range}")]
    ParameterOutOfRange {
        family: String,
        param: u32,
        range: String,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown class index {index} (partition has {count} classes)")]
    UnknownClass { index: usize, count: usize },

    #[error("partition was built for a different diagram")]
    DiagramMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
