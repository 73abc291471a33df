use thiserror::Error;

/// Errors raised by design construction, evaluation and the catalog.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension n = {0} (need n >= 2)")]
    InvalidDimension(usize),

    #[error("invalid Z4 digit string {0:?}")]
    InvalidDigits(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid selection: {0}")]
    InvalidSelection(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("invalid generator matrix: {0}")]
    InvalidGenerator(String),

    #[error("design cannot be halved: {0}")]
    NotHalvable(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("invalid column subset: {0}")]
    InvalidSubset(String),

    #[error("k_max = {k_max} out of range 1..={factors}")]
    KOutOfRange { k_max: usize, factors: usize },

    #[error("design is not group invariant; use the direct method")]
    NotGroupInvariant,

    #[error("invalid B notation: {0}")]
    InvalidBNotation(String),

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistent(_) => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
