use thiserror::Error;

/// Errors produced by the contact, calibration, and half-space modules.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid material: {0}")]
    InvalidMaterial(String),

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular input: {0}")]
    SingularInput(String),

    /// Root bracketing failed; carries the residuals at both bracket ends.
    #[error("no sign change in bracket: f(lo) = {f_lo:.6e}, f(hi) = {f_hi:.6e}")]
    BracketFailure { f_lo: f64, f_hi: f64 },

    #[error("inconsistent sample {index}: total {total:.6e} < measured {measured:.6e}")]
    InconsistentSample {
        index: usize,
        total: f64,
        measured: f64,
    },

    #[error("insufficient data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("degenerate design: {0}")]
    DegenerateDesign(String),

    /// Parameter inversion produced a nonpositive modulus; carries the fitted
    /// slopes for diagnosis.
    #[error("inversion failure: nonpositive E1 from H1 = {h1:.6}, H3 = {h3:.6}")]
    InversionFailure { h1: f64, h3: f64 },

    #[error("dataset alignment error: {0}")]
    Alignment(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("grid exceeds resource budget: system dimension {requested} > budget {budget}")]
    ResourceLimit { requested: usize, budget: usize },

    #[error("solver failure: {0}")]
    SolverFailure(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
