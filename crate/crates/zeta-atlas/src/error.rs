use thiserror::Error;

use crate::numerics::NumericsError;

/// Failure of a special-function or identity evaluation.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum MathError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("precision loss: estimated error {estimate:e} exceeds {tolerance:e}")]
    PrecisionLoss { estimate: f64, tolerance: f64 },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

pub type MathResult<T> = Result<T, MathError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> MathResult<T> {
    Err(MathError::Domain(msg.into()))
}
