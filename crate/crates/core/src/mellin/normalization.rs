use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{reflection_weight, rgamma, sin_pi, REFLECTION_POLE_TOL};

/// Multiplicative measure normalizations applied to a raw Mellin integral
/// `∫ K(g) g^{α−1} dg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizationKind {
    /// 1/Γ(α)
    Gamma,
    /// (1 − 2^{1−α})/Γ(α), taken literally.
    EtaGammaAsWritten,
    /// 1/Γ(α): the eta normalization with the spurious (1 − 2^{1−α}) removed,
    /// so that the Fermi kernel yields η(α) itself.
    EtaGammaCorrected,
    /// π csc(πα) / (2πi Γ(α)) = Γ(1 − α)/(2πi)
    HankelGamma,
    /// π csc(πα) / (2πi)
    HankelHaar,
}

fn two_pi_i() -> Complex64 {
    Complex64::new(0.0, 2.0 * PI)
}

/// 1 − 2^{1−α}
pub fn eta_factor(alpha: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    one - ((one - alpha) * std::f64::consts::LN_2).exp()
}

impl NormalizationKind {
    pub const ALL: [NormalizationKind; 5] = [
        NormalizationKind::Gamma,
        NormalizationKind::EtaGammaAsWritten,
        NormalizationKind::EtaGammaCorrected,
        NormalizationKind::HankelGamma,
        NormalizationKind::HankelHaar,
    ];

    pub fn weight(self, alpha: Complex64) -> Result<Complex64> {
        match self {
            NormalizationKind::Gamma | NormalizationKind::EtaGammaCorrected => Ok(rgamma(alpha)),
            NormalizationKind::EtaGammaAsWritten => Ok(eta_factor(alpha) * rgamma(alpha)),
            NormalizationKind::HankelGamma => Ok(reflection_weight(alpha)? / two_pi_i()),
            NormalizationKind::HankelHaar => {
                let n = alpha.re.round();
                if (alpha - n).norm() < REFLECTION_POLE_TOL {
                    return Err(Error::Pole {
                        function: "hankel_haar weight",
                        at: alpha,
                    });
                }
                Ok(PI / sin_pi(alpha) / two_pi_i())
            }
        }
    }

    /// Reason string when `α` sits close to a pole or zero of the weight.
    pub fn near_pole_warning(self, alpha: Complex64) -> Option<&'static str> {
        const CLOSE: f64 = 1e-3;
        match self {
            NormalizationKind::HankelGamma => {
                let n = alpha.re.round();
                (n >= 1.0 && sin_pi(alpha).norm() < CLOSE).then_some("near-pole-normalization")
            }
            NormalizationKind::HankelHaar => {
                (sin_pi(alpha).norm() < CLOSE).then_some("near-pole-normalization")
            }
            NormalizationKind::EtaGammaAsWritten => {
                (eta_factor(alpha).norm() < CLOSE).then_some("near-pole-normalization")
            }
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormalizationKind::Gamma => "gamma",
            NormalizationKind::EtaGammaAsWritten => "eta-gamma-as-written",
            NormalizationKind::EtaGammaCorrected => "eta-gamma-corrected",
            NormalizationKind::HankelGamma => "hankel-gamma",
            NormalizationKind::HankelHaar => "hankel-haar",
        }
    }
}

impl fmt::Display for NormalizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormalizationKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        NormalizationKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown normalization '{s}'"))
    }
}
