use thiserror::Error;

/// Errors produced by the synthesis toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("diagonal is not a tensor on the last line (obstruction {deviation:e} > tol {tol:e})")]
    NotATensor { deviation: f64, tol: f64 },

    #[error("singular matrix: pivot {pivot:e} in column {column}")]
    SingularMatrix { column: usize, pivot: f64 },

    #[error("solve residual {residual:e} exceeds bound {bound:e}")]
    Residual { residual: f64, bound: f64 },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("malformed gate: {0}")]
    Structural(String),

    #[error("circuit is not diagonal: basis state {input} maps to {output}")]
    NotDiagonal { input: usize, output: usize },

    #[error("verification failed: residual {residual:e} exceeds tol {tol:e}")]
    VerificationFailed { residual: f64, tol: f64 },

    #[error("gate kind `{0}` cannot be exported to OpenQASM")]
    UnsupportedGate(&'static str),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
