//! η and ζ as normalized Mellin transforms of the Fermi and Bose kernels,
//! along the real axis and along a Hankel contour.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mellin::{mellin, ring_mean, ContourSpec, Domain, Kernel, NormalizationKind, QuadOptions};
use crate::quad::QuadratureResult;
use crate::zeta::series::{chi, zeta_ref};
use crate::zeta::DomainStrip;

/// Distance to a positive integer below which the contour weight is treated
/// as singular.
pub const NEAR_INTEGER: f64 = 1e-2;
/// Ring used to evaluate the contour forms at or near positive integers.
pub const RING_RADIUS: f64 = 0.25;
pub const RING_POINTS: usize = 32;

/// Which literal normalization the real-axis eta form uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EtaMode {
    /// (1 − 2^{1−α})/Γ(α): yields (1 − 2^{1−α}) η(α).
    AsWritten,
    /// 1/Γ(α): yields η(α).
    #[default]
    Corrected,
}

impl EtaMode {
    pub fn normalization(self) -> NormalizationKind {
        match self {
            EtaMode::AsWritten => NormalizationKind::EtaGammaAsWritten,
            EtaMode::Corrected => NormalizationKind::EtaGammaCorrected,
        }
    }
}

/// What the contour evaluators do within [`NEAR_INTEGER`] of a positive
/// integer, where Γ(1 − α) has a pole and the closed-loop integral vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NearIntegerPolicy {
    /// Average the contour form over a ring around α (still the contour
    /// representation) and tag the result with a warning.
    #[default]
    Ring,
    /// Return the series value instead, tagged with a warning.
    Fallback,
    /// Fail with `NearInteger`.
    Reject,
}

pub const WARN_RING: &str = "near-integer-ring-mean";
pub const WARN_FALLBACK: &str = "near-integer-fallback-series";

fn nearest_positive_integer(alpha: Complex64) -> Option<f64> {
    let n = alpha.re.round();
    (n >= 1.0 && (alpha - n).norm() < NEAR_INTEGER).then_some(n)
}

/// ζ(α) for Re α > 1 from the Bose kernel on the real axis.
pub fn zeta_mellin_real(alpha: Complex64, opts: QuadOptions) -> Result<QuadratureResult> {
    DomainStrip::ZETA_REAL_AXIS.require(alpha, "zeta real-axis form")?;
    mellin(&Kernel::Bose, alpha, NormalizationKind::Gamma, &Domain::real_axis(), opts)
}

/// η(α) (corrected) or (1 − 2^{1−α}) η(α) (as written) for Re α > 0 from the
/// Fermi kernel on the real axis.
pub fn eta_mellin_real(alpha: Complex64, mode: EtaMode, opts: QuadOptions) -> Result<QuadratureResult> {
    DomainStrip::ETA_REAL_AXIS.require(alpha, "eta real-axis form")?;
    mellin(&Kernel::Fermi, alpha, mode.normalization(), &Domain::real_axis(), opts)
}

fn hankel_raw(kernel: &Kernel, alpha: Complex64, spec: &ContourSpec, opts: QuadOptions) -> Result<QuadratureResult> {
    mellin(kernel, alpha, NormalizationKind::HankelGamma, &Domain::Hankel(*spec), opts)
}

/// ζ(α) for any α ≠ 1 from the Bose kernel on a Hankel contour.
pub fn zeta_hankel(
    alpha: Complex64,
    spec: &ContourSpec,
    policy: NearIntegerPolicy,
    opts: QuadOptions,
) -> Result<QuadratureResult> {
    if (alpha - 1.0).norm() < 1e-12 {
        return Err(Error::Pole {
            function: "zeta",
            at: alpha,
        });
    }
    let Some(n) = nearest_positive_integer(alpha) else {
        return hankel_raw(&Kernel::Bose, alpha, spec, opts);
    };
    match policy {
        NearIntegerPolicy::Reject => Err(Error::NearInteger { at: alpha }),
        NearIntegerPolicy::Fallback => {
            let mut out = QuadratureResult::exact(zeta_ref(alpha)?);
            out.err_estimate = 1e-12 * out.value.norm().max(1.0);
            out.warn(WARN_FALLBACK);
            Ok(out)
        }
        NearIntegerPolicy::Ring => {
            // (z − 1) ζ(z) is entire, so the ring may also surround 1.
            let at_one = n == 1.0;
            let mut out = ring_mean(alpha, RING_RADIUS, RING_POINTS, |z| {
                let r = hankel_raw(&Kernel::Bose, z, spec, opts)?;
                Ok(if at_one { r.scaled(z - 1.0) } else { r })
            })?;
            if at_one {
                out = out.scaled((alpha - 1.0).inv());
            }
            out.warn(WARN_RING);
            Ok(out)
        }
    }
}

/// η(α) for any α from the Fermi kernel on a Hankel contour.
pub fn eta_hankel(
    alpha: Complex64,
    spec: &ContourSpec,
    policy: NearIntegerPolicy,
    opts: QuadOptions,
) -> Result<QuadratureResult> {
    if nearest_positive_integer(alpha).is_none() {
        return hankel_raw(&Kernel::Fermi, alpha, spec, opts);
    }
    match policy {
        NearIntegerPolicy::Reject => Err(Error::NearInteger { at: alpha }),
        NearIntegerPolicy::Fallback => {
            let v = crate::zeta::eta_series(alpha, crate::zeta::REF_TOL)?;
            let mut out = QuadratureResult::exact(v);
            out.err_estimate = 1e-13 * v.norm().max(1.0);
            out.warn(WARN_FALLBACK);
            Ok(out)
        }
        NearIntegerPolicy::Ring => {
            let mut out = ring_mean(alpha, RING_RADIUS, RING_POINTS, |z| {
                hankel_raw(&Kernel::Fermi, z, spec, opts)
            })?;
            out.warn(WARN_RING);
            Ok(out)
        }
    }
}

/// |ζ(α) − χ(α) ζ(1 − α)| with both ζ values taken from the contour form.
pub fn functional_equation_residual(alpha: Complex64, spec: &ContourSpec) -> Result<f64> {
    let opts = QuadOptions::default();
    let one = Complex64::new(1.0, 0.0);
    let left = zeta_hankel(alpha, spec, NearIntegerPolicy::Ring, opts)?.value;
    let right = zeta_hankel(one - alpha, spec, NearIntegerPolicy::Ring, opts)?.value;
    Ok((left - chi(alpha)? * right).norm())
}
