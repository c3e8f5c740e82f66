use thiserror::Error;

use crate::primitive::PrimitiveVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Problems found while reading an edge-list tree file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected \"parent child\" as two decimal ids")]
    Malformed { line: usize },
    #[error("line {line}: self loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {parent} -> {child}")]
    DuplicateEdge {
        line: usize,
        parent: usize,
        child: usize,
    },
    #[error("line {line}: vertex {child} already has parent {existing}, cannot also hang under {parent}")]
    MultipleParents {
        line: usize,
        child: usize,
        parent: usize,
        existing: usize,
    },
    #[error("line {line}: cycle detected through vertex {vertex}")]
    Cycle { line: usize, vertex: usize },
    #[error("line {line}: multiple roots ({first} and {second} never appear as a child)")]
    MultipleRoots {
        line: usize,
        first: usize,
        second: usize,
    },
    #[error("line {line}: vertex id {vertex} out of range, ids must be dense in 0..{n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid primitive vector ({x}, {y})")]
    NotPrimitive { x: u64, y: u64 },
    #[error("{a} and {b} are not unimodular neighbours (determinant {det})")]
    NotUnimodular {
        a: PrimitiveVector,
        b: PrimitiveVector,
        det: i128,
    },
    #[error("size parameter must be positive")]
    ZeroSize,
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("({f}, {d}) cannot be a valid pair: need f >= d >= 1")]
    InvalidPair { f: u64, d: u64 },
    #[error("only {found} of {needed} level-{level} vectors fit strictly between {lo} and {hi}")]
    NotEnoughVectors {
        level: usize,
        lo: PrimitiveVector,
        hi: PrimitiveVector,
        found: usize,
        needed: usize,
    },
    #[error("vector pool exhausted while assigning path {path} (level {level})")]
    PoolExhausted { path: usize, level: usize },
    #[error("leaf permutation is invalid: {0}")]
    BadPermutation(String),
    #[error("expected {expected} vectors, got {got}")]
    VectorCount { expected: usize, got: usize },
    #[error("vectors are not strictly increasing in slope at index {0}")]
    UnsortedVectors(usize),
    #[error("edge into vertex {0} has no vector")]
    MissingEdgeVector(usize),
    #[error("path {path} has {edges} edges, outside 1..={max}")]
    CorruptDecomposition {
        path: usize,
        edges: usize,
        max: usize,
    },
    #[error("partition parameter c must be at least 2, got {0}")]
    BadPartition(u64),
    #[error("level {level} subtree height {height} breaks the bound against n-1 = {n_minus_1}")]
    HeightBound {
        level: usize,
        height: usize,
        n_minus_1: usize,
    },
    #[error("zero-length direction")]
    ZeroDirection,
    #[error("edge into vertex {0} is not strictly inside the first quadrant")]
    EdgeOnAxis(usize),
    #[error("drawing has {got} points but the tree has {expected} vertices")]
    DrawingSize { expected: usize, got: usize },
    #[error("lower-bound tree needs n >= 12, got {0}")]
    TooSmallForT0(usize),
    #[error("tree size must be at least 1")]
    EmptyTree,
    #[error("coordinate file line {line}: {msg}")]
    Coords { line: usize, msg: String },
}
