use thiserror::Error;

/// Errors raised by ring construction, evaluation and the command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor {conductor} exceeds the cap of {cap} (set CREPANT_MAX_CONDUCTOR to raise it)")]
    ConductorTooLarge { conductor: u64, cap: u64 },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    /// `q_r * ... * q_s = 1` for an atom that enters the computation.
    #[error("pole at span ({r},{s}): q_{r}...q_{s} = 1")]
    Pole { r: usize, s: usize },

    #[error("malformed insertion: {0}")]
    MalformedInsertion(String),

    #[error("invalid curve class: {0}")]
    InvalidCurveClass(String),

    #[error("corrupted character table: {0}")]
    CorruptedTable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
