//! Both sides of the trace/determinant relation for finite spectra, the
//! normalization constant, and the Γ-factor variant of the reflection chain.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mellin::{mellin, ring_mean, ContourSpec, Domain, Kernel, NormalizationKind, QuadOptions};
use crate::quad::QuadratureResult;
use crate::special::{log_gamma, wrap_angle};
use crate::spectrum::Spectrum;
use crate::zeta::{NEAR_INTEGER, RING_POINTS, RING_RADIUS, WARN_RING};

/// Σ_j ε_j^{−α}, with the Euler–Maclaurin completion to N → ∞ for natural
/// spectra when Re α > 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralZeta {
    pub value: Complex64,
    /// Σ_{j>N} j^{−α}
    pub tail: Option<Complex64>,
}

impl SpectralZeta {
    pub fn completed(&self) -> Option<Complex64> {
        self.tail.map(|t| self.value + t)
    }
}

pub fn spectral_zeta(spectrum: &Spectrum, alpha: Complex64) -> SpectralZeta {
    let terms: Vec<f64> = spectrum.values().collect();
    let value: Complex64 = terms.iter().rev().map(|e| (-alpha * e.ln()).exp()).sum();
    let tail = match spectrum {
        Spectrum::Natural(n) if alpha.re > 1.0 => Some(natural_tail(*n as f64, alpha)),
        _ => None,
    };
    SpectralZeta { value, tail }
}

// Σ_{j>N} j^{−α} = ∫_N^∞ x^{−α}dx − N^{−α}/2 − Σ_k B_{2k}/(2k)! (d/dx)^{2k−1} x^{−α}|_N.
fn natural_tail(n: f64, alpha: Complex64) -> Complex64 {
    let pow = |e: Complex64| (-e * n.ln()).exp();
    let mut sum = pow(alpha - 1.0) / (alpha - 1.0) - 0.5 * pow(alpha);
    // B_2/2!, B_4/4!, B_6/6!, B_8/8!
    let b = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30_240.0, -1.0 / 1_209_600.0];
    // rising = α(α+1)…(α+2k−2)
    let mut rising = alpha;
    for (k, bk) in b.iter().enumerate() {
        let order = 2 * k as i32 + 1;
        sum += *bk * rising * pow(alpha + (order as f64));
        rising *= (alpha + order as f64) * (alpha + (order + 1) as f64);
    }
    sum
}

/// `φ = sign · 2nπα`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PhaseBranch {
    pub n: u32,
    pub sign: i8,
}

impl PhaseBranch {
    pub fn new(n: u32, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Config(format!("phase sign must be +1 or -1, got {sign}")));
        }
        Ok(PhaseBranch { n, sign })
    }

    pub fn principal() -> Self {
        PhaseBranch { n: 0, sign: 1 }
    }

    pub fn phase(&self, alpha: Complex64) -> Complex64 {
        alpha * (self.sign as f64 * 2.0 * PI * self.n as f64)
    }
}

fn near_positive_integer(alpha: Complex64) -> bool {
    let n = alpha.re.round();
    n >= 1.0 && (alpha - n).norm() < NEAR_INTEGER
}

/// Normalized Mellin transform of e^{−g}; equal to 1 wherever the
/// normalization is consistent. Contour weights near positive integers are
/// handled by a ring mean.
pub fn normalization_constant_with(
    alpha: Complex64,
    norm: NormalizationKind,
    domain: &Domain,
) -> Result<QuadratureResult> {
    let opts = QuadOptions::default();
    let eval = |z: Complex64| mellin(&Kernel::Exp, z, norm, domain, opts);
    let contour_weight = matches!(norm, NormalizationKind::HankelGamma | NormalizationKind::HankelHaar);
    if contour_weight && near_positive_integer(alpha) {
        let mut out = ring_mean(alpha, RING_RADIUS, RING_POINTS, eval)?;
        out.warn(WARN_RING);
        return Ok(out);
    }
    eval(alpha)
}

/// N(α) = Γ(1 − α)/(2πi) ∫_C e^{−g} g^{α−1} dg on a Hankel contour.
pub fn normalization_constant(alpha: Complex64, spec: &ContourSpec) -> Result<QuadratureResult> {
    normalization_constant_with(alpha, NormalizationKind::HankelGamma, &Domain::Hankel(*spec))
}

/// −Mellin[Σ e^{−ε_j g}](α): the logarithm of the trace side.
pub fn theorem_lhs_log(
    spectrum: &Spectrum,
    alpha: Complex64,
    norm: NormalizationKind,
    domain: &Domain,
) -> Result<QuadratureResult> {
    let m = mellin(&Kernel::Trace(spectrum.clone()), alpha, norm, domain, QuadOptions::default())?;
    Ok(m.scaled(Complex64::new(-1.0, 0.0)))
}

/// exp(−Mellin[Σ e^{−ε_j g}](α))
pub fn theorem_lhs(
    spectrum: &Spectrum,
    alpha: Complex64,
    norm: NormalizationKind,
    domain: &Domain,
) -> Result<Complex64> {
    Ok(theorem_lhs_log(spectrum, alpha, norm, domain)?.value.exp())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhsRecord {
    /// iφ + α Σ ε_j + log N(α)
    pub log_value: Complex64,
    /// e^{iφ}
    pub phase_applied: Complex64,
    /// log det e^β = Σ ε_j
    pub det_log: f64,
    pub n_alpha: Complex64,
    pub n_alpha_err: f64,
    pub warnings: Vec<String>,
}

/// e^{iφ} (det e^β)^α N(α), in log space. N(α) uses `norm` over `domain`.
pub fn theorem_rhs(
    spectrum: &Spectrum,
    alpha: Complex64,
    phase: PhaseBranch,
    norm: NormalizationKind,
    domain: &Domain,
) -> Result<RhsRecord> {
    let n = normalization_constant_with(alpha, norm, domain)?;
    if n.value.norm() == 0.0 {
        return Err(Error::Conditioning {
            at: alpha,
            message: "normalization constant vanishes".into(),
        });
    }
    let det_log = spectrum.trace();
    let i_phi = Complex64::i() * phase.phase(alpha);
    Ok(RhsRecord {
        log_value: i_phi + alpha * det_log + n.value.ln(),
        phase_applied: i_phi.exp(),
        det_log,
        n_alpha: n.value,
        n_alpha_err: n.err_estimate,
        warnings: n.warnings,
    })
}

/// Largest |Im α| at which `scalar_det_side` integrates along the real axis.
pub const SCALAR_REAL_AXIS_MAX_IM: f64 = 8.0;

/// Normalized Mellin of e^{−e^{−c} g}; equals e^{cα}.
///
/// Uses the Γ weight on the real axis where that integral converges and is
/// well conditioned, and the contour form with the Γ(1−α) weight elsewhere.
/// The real-axis integrand cancels to about e^{−π|Im α|/2} of its modulus.
pub fn scalar_det_side(c: f64, alpha: Complex64) -> Result<QuadratureResult> {
    if !(c > 0.0 && c < 300.0) {
        return Err(Error::Domain(format!("scalar determinant side needs 0 < c < 300, got {c}")));
    }
    let (norm, domain) = if alpha.re > 0.0 && alpha.im.abs() <= SCALAR_REAL_AXIS_MAX_IM {
        (NormalizationKind::Gamma, Domain::real_axis())
    } else {
        (NormalizationKind::HankelGamma, Domain::hankel())
    };
    mellin(&Kernel::ScaledExp((-c).exp()), alpha, norm, &domain, QuadOptions::default())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremResidual {
    /// log |lhs|
    pub log_lhs: f64,
    /// log |rhs|
    pub log_rhs: f64,
    pub log_gap: f64,
    /// arg lhs − arg rhs, wrapped to (−π, π]
    pub phase_gap: f64,
    pub warnings: Vec<String>,
}

/// Gap between the trace side (Γ weight, real axis) and the determinant side
/// (N(α) from the contour).
pub fn theorem_residual(spectrum: &Spectrum, alpha: Complex64, phase: PhaseBranch) -> Result<TheoremResidual> {
    theorem_residual_with(
        spectrum,
        alpha,
        phase,
        (NormalizationKind::Gamma, &Domain::real_axis()),
        (NormalizationKind::HankelGamma, &Domain::hankel()),
    )
}

pub fn theorem_residual_with(
    spectrum: &Spectrum,
    alpha: Complex64,
    phase: PhaseBranch,
    lhs: (NormalizationKind, &Domain),
    rhs: (NormalizationKind, &Domain),
) -> Result<TheoremResidual> {
    let l = theorem_lhs_log(spectrum, alpha, lhs.0, lhs.1)?;
    let r = theorem_rhs(spectrum, alpha, phase, rhs.0, rhs.1)?;
    let mut warnings = l.warnings;
    for w in r.warnings {
        if !warnings.contains(&w) {
            warnings.push(w);
        }
    }
    let log_lhs = l.value.re;
    let log_rhs = r.log_value.re;
    Ok(TheoremResidual {
        log_lhs,
        log_rhs,
        log_gap: log_lhs - log_rhs,
        phase_gap: wrap_angle(l.value.im - r.log_value.im),
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HcRecord {
    pub alpha0: Complex64,
    /// Γ(ᾱ₀) Γ(1 − ᾱ₀) / |Γ(α₀)|²
    pub gamma_factor: Complex64,
    /// log of e^{4nπi Re α₀} · gamma_factor · D^{2 Re α₀} / D at n = 0.
    pub log_ratio: Complex64,
    /// Largest |ratio − 1| over n ∈ {0, 1} and both signs.
    pub residual: f64,
    pub holds_at_half: bool,
}

/// The chain relation with the Γ-factor that appears under the contour
/// normalization.
pub fn hc_relation_check(alpha0: Complex64, spectrum: &Spectrum) -> Result<HcRecord> {
    let one = Complex64::new(1.0, 0.0);
    let conj = alpha0.conj();
    let log_factor = log_gamma(conj)? + log_gamma(one - conj)? - 2.0 * log_gamma(alpha0)?.re;
    let gamma_factor = log_factor.exp();
    let a = alpha0.re;
    let log_d = spectrum.trace();
    let base = log_factor + (2.0 * a - 1.0) * log_d;
    let mut residual: f64 = 0.0;
    for n in [0.0, 1.0] {
        for sign in [1.0, -1.0] {
            let lr = base + Complex64::new(0.0, sign * 4.0 * PI * n * a);
            residual = residual.max(crate::special::expm1(lr).norm());
        }
    }
    Ok(HcRecord {
        alpha0,
        gamma_factor,
        log_ratio: base,
        residual,
        holds_at_half: residual < 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn explicit(v: &[f64]) -> Spectrum {
        Spectrum::explicit(v.to_vec()).unwrap()
    }

    #[test]
    fn spectral_zeta_examples() {
        assert_eq!(spectral_zeta(&explicit(&[1.0]), c(3.3, -2.0)).value, c(1.0, 0.0));
        assert!((spectral_zeta(&explicit(&[1.0, 2.0]), c(1.0, 0.0)).value - 1.5).norm() < 1e-15);
        let s = spectral_zeta(&Spectrum::natural(1000).unwrap(), c(2.0, 0.0));
        let tail = s.tail.unwrap();
        assert!((tail.re - 1e-3).abs() < 1e-6);
        assert!((s.completed().unwrap() - PI * PI / 6.0).norm() < 1e-9);
        assert!(spectral_zeta(&Spectrum::natural(10).unwrap(), c(0.5, 0.0)).tail.is_none());
    }

    #[test]
    fn lhs_examples() {
        let g = NormalizationKind::Gamma;
        let d = Domain::real_axis();
        assert!((theorem_lhs(&explicit(&[1.0]), c(2.0, 0.0), g, &d).unwrap() - (-1f64).exp()).norm() < 1e-12);
        assert!((theorem_lhs(&explicit(&[2.0]), c(1.0, 0.0), g, &d).unwrap() - (-0.5f64).exp()).norm() < 1e-12);
        let nat = Spectrum::natural(200).unwrap();
        let a = c(2.0, 0.0);
        let want = (-spectral_zeta(&nat, a).value).exp();
        assert!((theorem_lhs(&nat, a, g, &d).unwrap() - want).norm() < 1e-9);
    }

    #[test]
    fn rhs_examples() {
        let hg = NormalizationKind::HankelGamma;
        let d = Domain::hankel();
        let r = theorem_rhs(&explicit(&[1.0]), c(1.0, 0.0), PhaseBranch::principal(), hg, &d).unwrap();
        assert!((r.log_value - 1.0).norm() < 1e-12);
        assert!((r.log_value.exp() - E).norm() < 1e-11);
        let r = theorem_rhs(&explicit(&[1.0, 2.0]), c(0.5, 0.0), PhaseBranch::principal(), hg, &d).unwrap();
        assert!((r.log_value - 1.5).norm() < 1e-12);
        let base = theorem_rhs(&explicit(&[1.0]), c(0.5, 0.0), PhaseBranch::principal(), hg, &d).unwrap();
        let turned = theorem_rhs(&explicit(&[1.0]), c(0.5, 0.0), PhaseBranch::new(1, 1).unwrap(), hg, &d).unwrap();
        assert!((turned.phase_applied + 1.0).norm() < 1e-15);
        assert!(((turned.log_value - base.log_value).exp() + 1.0).norm() < 1e-12);
        assert!(PhaseBranch::new(1, 0).is_err());
    }

    #[test]
    fn normalization_examples() {
        let spec = ContourSpec::default();
        for a in [0.5, 0.25, 1.5] {
            let n = normalization_constant(c(a, 0.0), &spec).unwrap();
            assert!((n.value - 1.0).norm() < 1e-9, "{a}: {}", n.value);
        }
        let n = normalization_constant(c(1.0, 0.0), &spec).unwrap();
        assert!((n.value - 1.0).norm() < 1e-12);
        // The other branch picks up e^{iπα}.
        let z2p = spec.with_branch(crate::special::BranchConvention::ZeroTwoPi);
        let n = normalization_constant(c(0.5, 0.0), &z2p).unwrap();
        assert!((n.value - Complex64::i()).norm() < 1e-9);
    }

    #[test]
    fn scalar_det_examples() {
        assert!((scalar_det_side(1.0, c(1.0, 0.0)).unwrap().value - E).norm() < 1e-8 * E);
        assert!((scalar_det_side(2.0, c(0.5, 0.0)).unwrap().value - E).norm() < 1e-8 * E);
        assert!((scalar_det_side(3f64.ln(), c(2.0, 0.0)).unwrap().value - 9.0).norm() < 1e-8 * 9.0);
        assert!(scalar_det_side(300.0, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn residual_examples() {
        let p = PhaseBranch::principal();
        let r = theorem_residual(&explicit(&[1.0]), c(1.0, 0.0), p).unwrap();
        assert!((r.log_lhs + 1.0).abs() < 1e-12 && (r.log_rhs - 1.0).abs() < 1e-12);
        assert!((r.log_gap + 2.0).abs() < 1e-12);
        let r = theorem_residual(&explicit(&[1.0, 2.0]), c(2.0, 0.0), p).unwrap();
        assert!((r.log_lhs + 1.25).abs() < 1e-12 && (r.log_rhs - 6.0).abs() < 1e-12);
        assert!((r.log_gap + 7.25).abs() < 1e-12);
        let r = theorem_residual(&explicit(&[0.7, 3.0]), c(0.8, 0.0), p).unwrap();
        assert!(r.phase_gap.abs() < 1e-12);
        let again = theorem_residual(&explicit(&[0.7, 3.0]), c(0.8, 0.0), p).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn hc_examples() {
        let one = explicit(&[1.0]);
        let h = hc_relation_check(c(0.5, 14.134725), &one).unwrap();
        assert!((h.gamma_factor - 1.0).norm() < 1e-10);
        assert!(h.holds_at_half);
        let h = hc_relation_check(c(0.5, 0.0), &one).unwrap();
        assert!((h.gamma_factor - 1.0).norm() < 1e-15);
        let h = hc_relation_check(c(0.3, 2.0), &one).unwrap();
        assert!(!h.holds_at_half);
        assert!(h.gamma_factor.re.is_finite());
        assert!(hc_relation_check(c(-2.0, 0.0), &one).is_err());
    }
}
