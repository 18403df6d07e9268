//! Reference η/ζ values from the alternating Dirichlet series with
//! Borwein's Chebyshev-type acceleration, continued to Re α < 0 through the
//! functional equation.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mellin::eta_factor;
use crate::special::{gamma, log_gamma, sin_pi};

/// Smallest tolerance accepted by [`eta_series`].
pub const MIN_SERIES_TOL: f64 = 1e-13;
/// Tolerance used by [`zeta_ref`].
pub const REF_TOL: f64 = 1e-13;
/// |1 − 2^{1−α}| below which ζ is not recovered from η.
pub const CONDITIONING_FLOOR: f64 = 1e-6;

const MIN_TERMS: usize = 20;
// d_n grows like 5.83^n; beyond this it leaves the f64 range.
const MAX_TERMS: usize = 380;

/// η(α) = Σ (−1)^{k−1} k^{−α}.
///
/// `tol` bounds the error relative to max(|η|, 1).
pub fn eta_series(alpha: Complex64, tol: f64) -> Result<Complex64> {
    if tol.is_nan() || tol < MIN_SERIES_TOL {
        return Err(Error::Config(format!("series tolerance must be >= {MIN_SERIES_TOL:e}, got {tol:e}")));
    }
    if !(alpha.re.is_finite() && alpha.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {alpha}")));
    }
    if alpha.re >= 0.0 {
        borwein_eta(alpha, tol)
    } else {
        // η(α) = (1 − 2^{1−α}) χ(α) ζ(1 − α), with ζ(1 − α) from η(1 − α).
        let one = Complex64::new(1.0, 0.0);
        let mirror = one - alpha;
        let eta_m = borwein_eta(mirror, tol)?;
        let zeta_m = eta_m / eta_factor(mirror);
        Ok(eta_factor(alpha) * chi(alpha)? * zeta_m)
    }
}

/// ζ(α) = η(α)/(1 − 2^{1−α}).
pub fn zeta_ref(alpha: Complex64) -> Result<Complex64> {
    if (alpha - 1.0).norm() < 1e-12 {
        return Err(Error::Pole {
            function: "zeta",
            at: alpha,
        });
    }
    let factor = eta_factor(alpha);
    if factor.norm() < CONDITIONING_FLOOR {
        return Err(Error::Conditioning {
            at: alpha,
            message: format!("|1 - 2^(1-a)| = {:.2e}", factor.norm()),
        });
    }
    Ok(eta_series(alpha, REF_TOL)? / factor)
}

/// χ(α) = 2^α π^{α−1} sin(πα/2) Γ(1−α), so that ζ(α) = χ(α) ζ(1−α).
pub fn chi(alpha: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let scale = (alpha * LN_2 + (alpha - 1.0) * PI.ln()).exp();
    Ok(scale * sin_pi(alpha / 2.0) * gamma(one - alpha)?)
}

// Term count from the bound 3 (1 + 2|t|) e^{π|t|/2} / (|Γ(α)| (3 + √8)^n).
fn borwein_terms(alpha: Complex64, tol: f64) -> Result<usize> {
    let t = alpha.im.abs();
    let ln_gamma_mod = match log_gamma(alpha) {
        Ok(l) => l.re,
        // Γ has a pole at the origin, where the bound vanishes.
        Err(_) => return Ok(MIN_TERMS),
    };
    let ln_bound = (3.0 * (1.0 + 2.0 * t)).ln() + PI * t / 2.0 - ln_gamma_mod - tol.ln();
    let n = (ln_bound / (3.0 + 8f64.sqrt()).ln()).ceil().max(MIN_TERMS as f64) as usize + 2;
    if n > MAX_TERMS {
        return Err(Error::Accuracy {
            message: format!("series acceleration at {alpha} needs {n} terms (limit {MAX_TERMS})"),
            estimate: f64::INFINITY,
            target: tol,
        });
    }
    Ok(n)
}

fn borwein_eta(alpha: Complex64, tol: f64) -> Result<Complex64> {
    let n = borwein_terms(alpha, tol)?;
    let nf = n as f64;
    // d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!)
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut acc = 0.0;
    for i in 0..=n {
        if i > 0 {
            let j = (i - 1) as f64;
            term *= (nf + j) * 4.0 * (nf - j) / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
        }
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = Complex64::new(0.0, 0.0);
    let mut sum_sq = 0.0;
    for (k, dk) in d.iter().take(n).enumerate() {
        let x = (-alpha * ((k + 1) as f64).ln()).exp() * (dk - dn);
        sum_sq += x.norm_sqr();
        if k % 2 == 0 {
            sum += x;
        } else {
            sum -= x;
        }
    }
    let value = -sum / dn;
    // Independent rounding of each term, a few ulps apiece.
    let roundoff = 4.0 * f64::EPSILON * sum_sq.sqrt() / dn;
    let allowed = tol * value.norm().max(1.0);
    if roundoff > allowed {
        return Err(Error::Accuracy {
            message: format!("cancellation in the accelerated series at {alpha}"),
            estimate: roundoff,
            target: allowed,
        });
    }
    Ok(value)
}
