use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("edge count C({n}, {r}) does not fit in 63 bits")]
    EdgeCountOverflow { n: usize, r: usize },

    #[error("subset has {got} vertices, expected {expected}")]
    WrongSubsetLength { expected: usize, got: usize },

    #[error("subset is not strictly increasing at position {position}")]
    NotIncreasing { position: usize },

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range (edge count {count})")]
    EdgeIndexOutOfRange { index: u64, count: u64 },

    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: u32, k: u8 },

    #[error("coloring has {got} entries, expected {expected}")]
    ColoringLength { expected: u64, got: u64 },

    #[error("vertices must be distinct (got {0} twice)")]
    RepeatedVertex(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("empty color set")]
    EmptyColorSet,

    #[error("graph needs at least 3 vertices, got {0}")]
    GraphTooSmall(usize),

    #[error("self loop at vertex {0}")]
    SelfLoop(usize),

    #[error("degree condition fails: d({u}) + d({v}) = {sum} < {n}")]
    DegreeCondition { u: usize, v: usize, sum: usize, n: usize },

    #[error("invalid cycle certificate: {0}")]
    InvalidCertificate(String),

    #[error("core sequence is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("reserved edge {edge} is not a candidate at position {position}")]
    InvalidReservation { position: usize, edge: u64 },

    #[error("{stage}: no unused color-{color} edge with a fresh vertex at {vertex}")]
    StepExhausted { stage: String, vertex: usize, color: u8 },

    #[error("cannot partition {available} vertices with a part of size {needed}")]
    PartitionInfeasible { needed: usize, available: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("work budget of {0} units exhausted")]
    BudgetExhausted(u64),

    #[error("exhaustive enumeration infeasible: {colorings_estimate} colorings exceed the limit of {limit}")]
    Infeasible { colorings_estimate: f64, limit: u64 },

    #[error("invalid generator scheme: {0}")]
    InvalidScheme(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}
