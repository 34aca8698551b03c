use thiserror::Error;

/// Errors raised by the twistor library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix order must be even, got {0}")]
    OddOrder(usize),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("not a complex structure: |A^2 + I|_F = {residual:e}")]
    NotComplexStructure { residual: f64 },
    #[error("not an orthogonal complex structure: |A + A^t|_F = {residual:e}")]
    NotOrthogonal { residual: f64 },
    #[error("matrix is not tangent at the base point: residual {residual:e}")]
    NotTangent { residual: f64 },
    #[error("tangent vectors are attached to different base points")]
    BaseMismatch,
    #[error("matrix is numerically singular")]
    Singular,
    #[error("matrix is not skew-symmetric: |M + M^t|_F = {residual:e}")]
    NotSkew { residual: f64 },
    #[error("parameter {name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("finite-difference step {h:e} drifts off the manifold: residual {residual:e}")]
    StepTooLarge { h: f64, residual: f64 },
    #[error("point is not critical: gradient norm {grad_norm:e}")]
    NotCritical { grad_norm: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
