//! Mellin transforms of spectral kernels along the positive real axis and
//! along a Hankel contour, with the measure normalizations of the eta/zeta
//! representations.

mod contour;
mod kernel;
mod normalization;
mod transform;

pub use contour::{
    build_hankel, ContourSpec, Orientation, Path, PathPoint, Segment, DEFAULT_INNER_RADIUS,
    DEFAULT_NODES_PER_SEGMENT, DEFAULT_TRUNCATION,
};
pub use kernel::Kernel;
pub use normalization::{eta_factor, NormalizationKind};
pub use transform::{
    default_truncation, integrate_contour, integrate_real_axis, mellin, ring_mean, Domain,
    QuadOptions,
};
