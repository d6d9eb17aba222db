use std::fmt;

use thiserror::Error;

/// A located problem in notation text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseDiagnostic {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseDiagnostic {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error {0}")]
    Parse(#[from] ParseDiagnostic),
    #[error("dimension must be at least 1, got {0}")]
    InvalidDimension(u32),
    #[error("axis {axis} is out of range for dimension {dim}")]
    AxisOutOfRange { axis: u32, dim: u32 },
    #[error("strings live in different dimensions ({left} and {right})")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("both operands carry an origin marker")]
    OriginConflict,
    #[error("origin marker must be at the front of the string")]
    OriginNotAtFront,
    #[error("scalar factor must be positive")]
    ZeroScalar,
    #[error("right operand is not a suffix of the left operand")]
    SuffixMismatch,
    #[error("removed string is not a prefix of the whole")]
    PrefixMismatch,
    #[error("input does not normalize to a single run of one digit")]
    NotASingleRun,
    #[error("pattern length {pattern} does not divide run length {run}")]
    IndivisibleLength { run: usize, pattern: usize },
    #[error("invalid transform pattern: {0}")]
    InvalidPattern(String),
    #[error("no rotation shortcut for {0} degrees")]
    UnsupportedAngle(i64),
    #[error("invalid metric configuration: {0}")]
    InvalidMetric(String),
    #[error("invalid sample set: {0}")]
    InvalidSample(String),
    #[error("malformed graph string: {0}")]
    MalformedGraphString(String),
    #[error("rendering supports dimension 2 only, got {0}")]
    DimensionUnsupported(u32),
    #[error("invalid render configuration: {0}")]
    InvalidRenderConfig(String),
}

impl Error {
    /// True for errors caused by malformed input text rather than violated preconditions.
    pub fn is_notation_error(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
