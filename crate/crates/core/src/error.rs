use thiserror::Error;

/// Errors raised by the origami library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid angle: {0}")]
    InvalidAngle(String),

    #[error("invalid point: coordinates must be finite")]
    InvalidPoint,

    #[error("lines are parallel")]
    ParallelLines,

    #[error("lines are nearly parallel (|sin(beta - alpha)| = {0:e})")]
    NearParallel(f64),

    #[error("angle set needs at least 3 angles, got {0}")]
    TooFewAngles(usize),

    #[error("expected exactly {expected} angles, got {got}")]
    WrongArity { expected: usize, got: usize },

    #[error("angle set must contain the angle 0")]
    MissingZeroAngle,

    #[error("index out of range: {0}")]
    InvalidIndex(String),

    #[error("degenerate rebase: x_i and x_j coincide")]
    DegenerateRebase,

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("group {0} is not the point group of any origami structure")]
    UnreachableGroup(String),

    #[error("dense angle set ({0} angles) needs a bounding box or a point cap")]
    Unbounded(usize),

    #[error("nothing to render: snapshot has no points")]
    EmptyRender,

    #[error("invalid bounding box: {0}")]
    InvalidBbox(String),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
