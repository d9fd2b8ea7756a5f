use thiserror::Error;

use crate::cuts::ValidationReport;
use crate::theta::NotPartialCube;

/// Errors raised by graph construction, distance computation and the
/// Wiener index routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge index {index} out of range for graph with {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the all-pairs cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("arithmetic overflow while accumulating the Wiener index")]
    ArithmeticOverflow,

    #[error("edge cut is empty")]
    EmptyCut,
    #[error("removing the cut leaves {0} components, expected 2")]
    NotTwoComponents(usize),
    #[error("cut edge {0} has both endpoints on the same side")]
    EdgeWithinSide(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("edge {edge} is covered {found} times, expected {expected}")]
    CoverageMismatch {
        edge: usize,
        found: usize,
        expected: usize,
    },
    #[error("scale must be positive")]
    ZeroScale,
    #[error("cut partition is invalid: {0}")]
    InvalidPartition(Box<ValidationReport>),
    #[error("scaled cut family is invalid: {0}")]
    InvalidFamily(Box<ValidationReport>),
    #[error("cut sum {sum} is not divisible by scale {scale}")]
    NotDivisibleByScale { sum: u64, scale: u64 },
    #[error("conditions (i)/(ii) do not hold: {0}")]
    PreconditionFailed(Box<ValidationReport>),
    #[error("not a partial cube: {0}")]
    NotPartialCube(NotPartialCube),

    #[error("hypercube dimension {0} outside 1..=20")]
    DimensionOutOfRange(usize),
    #[error("size {0} out of range for this family")]
    SizeOutOfRange(usize),
    #[error("odd cycle cut family needs an odd n >= 3, got {0}")]
    EvenOrTooSmall(usize),
    #[error("hexagon system is empty")]
    EmptySystem,
    #[error("hexagon cells are not edge-connected")]
    CellsNotConnected,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
