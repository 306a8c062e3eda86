use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("{n_qubits} qubits exceeds the configured maximum of {max}")]
    TooManyQubits { n_qubits: usize, max: usize },

    #[error("state is not normalized: norm {norm}")]
    NotNormalized { norm: f64 },

    #[error("matrix is not Hermitian: max |A - A^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("invalid Pauli word {word:?}: {reason}")]
    InvalidPauliWord { word: String, reason: String },

    #[error("eigensolve failed on {dim}x{dim} matrix (max |entry| = {max_entry:e}): {reason}")]
    Eigensolve {
        dim: usize,
        max_entry: f64,
        reason: String,
    },

    #[error("time {t} outside [0, {total_time}]")]
    TimeOutOfRange { t: f64, total_time: f64 },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("condition 1 - v^2/2 > epsilon violated: v = {v}, epsilon = {epsilon}")]
    ConditionViolated { v: f64, epsilon: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
