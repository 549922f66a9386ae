use thiserror::Error;

/// Errors produced by the spectral toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector length {found} does not match superoperator dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("sector rule {rule} inapplicable to this model: entry ({row}, {col}) of magnitude {magnitude:e} couples different sectors")]
    RuleInapplicable {
        rule: &'static str,
        row: usize,
        col: usize,
        magnitude: f64,
    },

    #[error("steady-state manifold not unique (smallest pivot {pivot:e} below tolerance {tolerance:e})")]
    SteadyStateNotUnique { pivot: f64, tolerance: f64 },

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("empty spectrum")]
    EmptySpectrum,

    #[error("gapless spectrum: Re[lambda_1] = {re:e}, relaxation time diverges")]
    Gapless { re: f64 },

    #[error("cardinality mismatch: {left} vs {right} points")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("label out of range: {0}")]
    OutOfRange(String),

    #[error("closed form not available: {0}")]
    NoClosedForm(String),

    #[error("no interior minimum found on the supplied grid")]
    NoInteriorMinimum,

    #[error("no interior maximum found on the supplied grid")]
    NoInteriorMaximum,

    #[error("no jump found: largest increment {largest:e} does not exceed {threshold:e}")]
    NoJump { largest: f64, threshold: f64 },

    #[error("convergence budget exceeded at n_max = {n_max}")]
    BudgetExceeded { n_max: usize },

    #[error("configuration error in `{field}`: {reason}")]
    Config { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
