//! The reflection α ↦ 1 − ᾱ on zeros of ζ and the determinant chain built on
//! it.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mellin::{ContourSpec, QuadOptions};
use crate::spectrum::Spectrum;
use crate::zeta::representations::{eta_hankel, zeta_hankel, NearIntegerPolicy};
use crate::zeta::Func;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvolutionRecord {
    pub alpha0: Complex64,
    pub reflected_point: Complex64,
    pub value_at: Complex64,
    pub value_at_reflected: Complex64,
    /// log det e^β = Σ ε_j
    pub log_det: f64,
    /// Relative chain residual max_± |e^{±4nπi Re α₀} D^{2 Re α₀} / D − 1|,
    /// for n = 0 and n = 1.
    pub chain_residual: [f64; 2],
}

/// 1 − ᾱ
pub fn reflect(alpha: Complex64) -> Complex64 {
    Complex64::new(1.0 - alpha.re, alpha.im)
}

/// Relative residual of the chain e^{±4nπi a} D^{2a} = D, `a = Re α₀`, with
/// `log D` given.
pub fn chain_residual(re_alpha0: f64, log_det: f64, n: u32) -> f64 {
    [1.0, -1.0]
        .into_iter()
        .map(|sign| {
            let phase = sign * 4.0 * PI * n as f64 * re_alpha0;
            let log_ratio = Complex64::new((2.0 * re_alpha0 - 1.0) * log_det, phase);
            crate::special::expm1(log_ratio).norm()
        })
        .fold(0.0, f64::max)
}

/// Evaluate ζ (or η) at α₀ and at its reflection, both from the contour form
/// with series fallback near positive integers, and the chain residuals for
/// `D = det e^β` of `spectrum`.
pub fn involution_check(alpha0: Complex64, spectrum: &Spectrum, func: Func) -> Result<InvolutionRecord> {
    if !(alpha0.re > 0.0 && alpha0.re < 1.0) {
        return Err(Error::Domain(format!(
            "involution check needs 0 < Re a0 < 1, got {alpha0}"
        )));
    }
    let spec = ContourSpec::default();
    let opts = QuadOptions::default();
    let eval = |a: Complex64| -> Result<Complex64> {
        let r = match func {
            Func::Zeta => zeta_hankel(a, &spec, NearIntegerPolicy::Fallback, opts)?,
            Func::Eta => eta_hankel(a, &spec, NearIntegerPolicy::Fallback, opts)?,
        };
        Ok(r.value)
    };
    let reflected_point = reflect(alpha0);
    let value_at = eval(alpha0)?;
    let value_at_reflected = if reflected_point == alpha0 {
        value_at
    } else {
        eval(reflected_point)?
    };
    let log_det = spectrum.trace();
    Ok(InvolutionRecord {
        alpha0,
        reflected_point,
        value_at,
        value_at_reflected,
        log_det,
        chain_residual: [
            chain_residual(alpha0.re, log_det, 0),
            chain_residual(alpha0.re, log_det, 1),
        ],
    })
}
