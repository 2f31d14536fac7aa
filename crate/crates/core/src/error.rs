use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    /// Γ_den ≤ 0: the state left the regime where the coupling weight is
    /// well defined. Runs must abort.
    #[error("coupling weight denominator is not positive (num = {num:e}, den = {den:e})")]
    NonpositiveDenominator { num: f64, den: f64 },

    #[error("initial projection is singular or needs a nonpositive scaling factor")]
    SingularProjection,

    #[error("not converged after {steps} steps (residual {residual:e}, tolerance {tol:e})")]
    NotConverged { steps: u64, residual: f64, tol: f64 },

    #[error("empty window for decay fit")]
    EmptyWindow,

    #[error("extrapolation stencil for class {n} leaves the grid")]
    TooCloseToBoundary { n: usize },

    #[error("interval [{a}, {b}] for class {n} is too close to a singular point")]
    IntervalTouchesSingularity { n: usize, a: f64, b: f64 },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
