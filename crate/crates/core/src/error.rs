use thiserror::Error;

use crate::diagram::EdgeLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("edge {0} has no matching {1} end")]
    DanglingEdge(EdgeLabel, &'static str),
    #[error("edge {0} is used twice as an {1} slot")]
    DuplicateSlot(EdgeLabel, &'static str),
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("missing `Q` line")]
    MissingMarkedEdge,
    #[error("marked edge {0} is not an edge of the diagram")]
    InvalidMarkedEdge(EdgeLabel),
    #[error("rotation system is not planar (V - E + F = {euler}, expected 2)")]
    NonPlanar { euler: i64 },
    #[error("both sides of the marked edge lie in the same region")]
    DegenerateMarking,
    #[error("invalid braid letter {letter} for {strands} strands")]
    InvalidBraidLetter { letter: i32, strands: usize },
    #[error("singular mask position {0} is outside the braid word")]
    InvalidMaskPosition(usize),
    #[error("braid closure is split into {0} components")]
    SplitClosure(usize),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("vertex {0} is not a singular vertex")]
    NotSingular(usize),
    #[error("vertex {0} is already singular")]
    AlreadySingular(usize),
    #[error("diagram has no singular vertex")]
    NoSingularVertex,
    #[error("diagram is not planar singular")]
    NotPlanarSingular,
    #[error("state violates the planar grading identity M = 2S")]
    CertificateViolation,
    #[error("instance too large for the brute-force oracle ({vertices} vertices, limit {limit})")]
    InstanceTooLarge { vertices: usize, limit: usize },
    #[error("skein recursion exceeded depth {0}")]
    RecursionDepth(usize),
}

/// Failure to read a polynomial back from its rendered form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial {input:?} near {near:?}")]
pub struct ParsePolyError {
    input: String,
    near: String,
}

impl ParsePolyError {
    pub(crate) fn new(input: &str, near: &str) -> Self {
        Self {
            input: input.to_string(),
            near: near.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
