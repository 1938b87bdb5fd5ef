//! Error types shared by the spectral and model layers.

use thiserror::Error;

/// Errors raised by grid construction, transforms and operator application.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("n_modes must be an even integer >= 8, got {0}")]
    InvalidModeCount(usize),

    #[error("domain length must be positive and finite, got {0}")]
    InvalidLength(f64),

    #[error("array length {got} does not match the grid's {expected} modes")]
    LengthMismatch { expected: usize, got: usize },

    #[error("fields live on different grids ({0} modes / length {1} vs {2} modes / length {3})")]
    GridMismatch(usize, f64, usize, f64),

    #[error(
        "Hermitian symmetry violated: relative residual {residual:.3e} exceeds {tolerance:.1e}"
    )]
    HermitianViolation { residual: f64, tolerance: f64 },

    #[error("weight overflow guard: sigma*max|xi| = {arg:.6e} exceeds the limit {max:.1e}")]
    WeightOverflow { arg: f64, max: f64 },

    #[error("sigma must be nonnegative, got {0}")]
    NegativeSigma(f64),

    #[error("non-finite values encountered in {0}")]
    NonFinite(&'static str),

    #[error("{0} must be positive, got {1}")]
    NonPositive(&'static str, f64),
}
