use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: Complex64 },

    #[error("{0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("accuracy target not met: {message} (estimate {estimate:.3e}, target {target:.3e})")]
    Accuracy {
        message: String,
        estimate: f64,
        target: f64,
    },

    #[error("ill-conditioned evaluation at {at}: {message}")]
    Conditioning { at: Complex64, message: String },

    #[error("near-integer normalization pole at {at}; fallback required")]
    NearInteger { at: Complex64 },

    #[error("function vanishes on the counting boundary near {at} (|f| = {modulus:.3e})")]
    BoundaryZero { at: Complex64, modulus: f64 },

    #[error("phase tracking failed near {at}: {message}")]
    PhaseTracking { at: Complex64, message: String },

    #[error("overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error objects and FFI codes.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "PoleError",
            Error::Domain(_) => "DomainError",
            Error::Config(_) => "ConfigError",
            Error::Accuracy { .. } => "AccuracyError",
            Error::Conditioning { .. } => "ConditioningError",
            Error::NearInteger { .. } => "NearIntegerWarning",
            Error::BoundaryZero { .. } => "BoundaryZeroError",
            Error::PhaseTracking { .. } => "PhaseTrackingError",
            Error::Overflow(_) => "OverflowError",
        }
    }
}
