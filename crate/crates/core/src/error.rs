use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M†| = {deviation:.3e})")]
    NonHermitianInput { deviation: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid correlation tensor: {0}")]
    InvalidTensor(String),

    #[error("bad subsystem: {0}")]
    BadSubsystem(String),

    #[error("cannot parse density matrix file {path}: {reason}")]
    FileParse { path: PathBuf, reason: String },

    #[error("density matrix invariant violated: {0}")]
    InvariantViolation(String),

    #[error("direction is not a unit vector (norm {norm})")]
    NonUnitVector { norm: f64 },

    #[error("survival probability |E(T)|^2 underflows at measurement interval T = {interval}")]
    ZeroSurvival { interval: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown figure preset '{0}'")]
    UnknownPreset(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
