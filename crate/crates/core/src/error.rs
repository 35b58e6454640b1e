use thiserror::Error;

use crate::complex::NodeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("node id must be a positive integer, got {0}")]
    InvalidNodeId(u64),
    #[error("simplex {0:?} repeats a vertex")]
    DegenerateSimplex(Vec<NodeId>),
    #[error("simplex {0:?} listed more than once")]
    DuplicateSimplex(Vec<NodeId>),
    #[error("node {0} is not part of the complex")]
    UnknownNodeId(NodeId),
    #[error("face {face:?} of {simplex:?} is missing")]
    ClosureViolation {
        simplex: Vec<NodeId>,
        face: Vec<NodeId>,
    },
    #[error("triangle {0:?} is not filled")]
    NotFilled([NodeId; 3]),
    #[error("entry ({row}, {col}) of B12 B12^T is {value}, not a multiple of 4")]
    NonIntegerEntry { row: usize, col: usize, value: u64 },
    #[error("every node has zero degree under the {0} operator")]
    EmptyActiveSet(&'static str),
    #[error("node set is empty, full, or touches no filled triangle on one side")]
    ZeroVolume,
    #[error("complex has {0} nodes; exhaustive search is limited to {1}")]
    TooLarge(usize, usize),
    #[error("no subset has positive volume on both sides")]
    NoFeasibleCut,
    #[error("eigenvalue {0} did not converge")]
    NoConvergence(usize),
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("entries ({row}, {col}) and ({col}, {row}) differ")]
    NotSymmetric { row: usize, col: usize },
    #[error("second smallest eigenvalue {0:e} is zero; split into components first")]
    Disconnected(f64),
    #[error("only {distinct} distinct points for {k} clusters")]
    DegeneratePoints { distinct: usize, k: usize },
    #[error("invalid cluster count {k} for {n} points")]
    InvalidClusterCount { k: usize, n: usize },
    #[error("partitions cover different node sets")]
    NodeSetMismatch,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
