//! Mellin-transform workbench for the Riemann zeta and Dirichlet eta
//! functions.
//!
//! * [`special`]: complex Γ, log Γ, the Hankel reflection weight and
//!   sheet-aware complex powers.
//! * [`mellin`]: Hankel contours, kernels, normalizations, and Mellin
//!   transforms along the real axis or the contour.
//! * [`zeta`]: η/ζ evaluators (series oracle, real-axis and contour
//!   representations), critical-line zeros and rectangle zero counts.
//! * [`identity`]: exp-trace/determinant checks, spectral zeta functions and
//!   the two sides of the trace/determinant relation at finite truncation.
//! * [`cli`]: the batch command-line surface.

#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod error;
pub mod identity;
pub mod mellin;
pub mod quad;
pub mod special;
pub mod spectrum;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex scalar used for α, g and function values.
pub type ComplexValue = Complex64;
