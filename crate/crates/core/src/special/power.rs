use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a continuous angle is assigned to points of a Hankel path.
///
/// Both modes receive the geometric angle `φ` of a path point measured
/// continuously from the upper edge (`φ ∈ [ψ, 2π − ψ]` for rays tilted by `ψ`).
/// `ZeroTwoPi` raises `g` itself to the power with angle `φ`, placing the cut on
/// the positive real axis. `Symmetric` raises `−g` with angle `φ − π`, i.e. the
/// principal power of `−g`, so the two edges pick up the phases `e^{∓iπα}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchConvention {
    ZeroTwoPi,
    #[default]
    Symmetric,
}

impl BranchConvention {
    /// `(base, assigned_angle)` to feed into [`cpow`] for a path point `g`
    /// with continuous geometric angle `phi`.
    pub fn base_and_angle(self, g: Complex64, phi: f64) -> (Complex64, f64) {
        match self {
            BranchConvention::ZeroTwoPi => (g, phi),
            BranchConvention::Symmetric => (-g, phi - PI),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BranchConvention::ZeroTwoPi => "zero-two-pi",
            BranchConvention::Symmetric => "symmetric",
        }
    }
}

impl std::str::FromStr for BranchConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "zero-two-pi" | "zero_two_pi" => Ok(BranchConvention::ZeroTwoPi),
            "symmetric" => Ok(BranchConvention::Symmetric),
            other => Err(format!("unknown branch convention '{other}'")),
        }
    }
}

/// Reduce an angle to (−π, π].
pub fn wrap_angle(theta: f64) -> f64 {
    let mut r = theta.rem_euclid(TAU);
    if r > PI {
        r -= TAU;
    }
    r
}

/// `g^α = exp(α (ln|g| + i·assigned_angle))` on the sheet selected by the caller.
pub fn cpow(g: Complex64, alpha: Complex64, assigned_angle: f64) -> Result<Complex64> {
    if g.re == 0.0 && g.im == 0.0 {
        return Err(Error::Domain("cpow: base is zero".into()));
    }
    if wrap_angle(assigned_angle - g.arg()).abs() >= 1e-9 {
        return Err(Error::Domain(format!(
            "cpow: assigned angle {assigned_angle} inconsistent with arg({g}) = {}",
            g.arg()
        )));
    }
    Ok(cpow_unchecked(g, alpha, assigned_angle))
}

#[inline]
pub(crate) fn cpow_unchecked(g: Complex64, alpha: Complex64, assigned_angle: f64) -> Complex64 {
    let log_g = Complex64::new(g.norm().ln(), assigned_angle);
    (alpha * log_g).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn cpow_examples() {
        let one = Complex64::new(1.0, 0.0);
        let a = Complex64::new(0.3, -2.0);
        assert!((cpow(one, a, 0.0).unwrap() - one).norm() < 1e-15);
        let v = cpow(Complex64::new(E, 0.0), Complex64::new(2.0, 0.0), 0.0).unwrap();
        assert!((v - E * E).norm() < 1e-14);
        let v = cpow(one, Complex64::new(0.5, 0.0), TAU).unwrap();
        assert!((v + one).norm() < 1e-15);
    }

    #[test]
    fn cpow_rejects_zero_and_wrong_sheet() {
        let a = Complex64::new(0.5, 0.0);
        assert!(cpow(Complex64::new(0.0, 0.0), a, 0.0).is_err());
        assert!(cpow(Complex64::new(1.0, 0.0), a, 1.0).is_err());
    }

    #[test]
    fn modulus_by_construction() {
        let g = Complex64::from_polar(2.5, 1.1);
        let a = Complex64::new(0.7, 3.0);
        for k in -2..=2 {
            let theta = 1.1 + TAU * k as f64;
            let v = cpow(g, a, theta).unwrap();
            let want = 2.5f64.powf(0.7) * (-3.0 * theta).exp();
            assert!((v.norm() - want).abs() <= 1e-13 * want);
        }
    }

    #[test]
    fn symmetric_angle_is_principal_arg_of_negated_base() {
        for phi in [0.0, 0.5, PI, 4.0, TAU] {
            let g = Complex64::from_polar(1.3, phi);
            let (base, angle) = BranchConvention::Symmetric.base_and_angle(g, phi);
            assert!(wrap_angle(angle - base.arg()).abs() < 1e-12);
        }
    }
}
