//! Complex special functions and branch-aware powers.

mod gamma;
mod power;

pub use gamma::{
    cos_pi_real, gamma, log_gamma, reflection_weight, rgamma, sin_pi, sin_pi_real,
    GAMMA_POLE_TOL, REFLECTION_POLE_TOL,
};
pub use power::{cpow, wrap_angle, BranchConvention};
pub(crate) use power::cpow_unchecked;

use num_complex::Complex64;

/// e^z − 1 without cancellation for small |z|.
pub fn expm1(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    let half_sin = (0.5 * y).sin();
    Complex64::new(
        x.exp_m1() * y.cos() - 2.0 * half_sin * half_sin,
        x.exp() * y.sin(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm1_small_and_large() {
        let z = Complex64::new(1e-9, -2e-9);
        let v = expm1(z);
        assert!((v - z).norm() < 1e-17);
        let z = Complex64::new(1.5, 2.0);
        assert!((expm1(z) - (z.exp() - 1.0)).norm() < 1e-14);
    }
}
