use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::special::expm1;
use crate::spectrum::Spectrum;

/// Integrand kernels `K(g)` whose Mellin transforms are taken.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    /// 1/(e^g − 1)
    Bose,
    /// 1/(e^g + 1)
    Fermi,
    /// e^{−g}
    Exp,
    /// e^{−c g}, c > 0
    ScaledExp(f64),
    /// Σ_j e^{−ε_j g}
    Trace(Spectrum),
}

impl Kernel {
    pub fn eval(&self, g: Complex64) -> Complex64 {
        match self {
            Kernel::Bose => {
                if g.re > 1.0 {
                    let w = (-g).exp();
                    w / (1.0 - w)
                } else {
                    expm1(g).inv()
                }
            }
            Kernel::Fermi => {
                if g.re > 0.0 {
                    let w = (-g).exp();
                    w / (1.0 + w)
                } else {
                    (g.exp() + 1.0).inv()
                }
            }
            Kernel::Exp => (-g).exp(),
            Kernel::ScaledExp(c) => (-*c * g).exp(),
            Kernel::Trace(s) => s.heat_trace(g),
        }
    }

    /// Exponential decay rate of `K` along the positive real axis.
    pub fn decay_rate(&self) -> f64 {
        match self {
            Kernel::Bose | Kernel::Fermi | Kernel::Exp => 1.0,
            Kernel::ScaledExp(c) => *c,
            Kernel::Trace(s) => s.min(),
        }
    }

    /// Order of the pole of `K` at the origin.
    pub fn origin_pole_order(&self) -> i32 {
        match self {
            Kernel::Bose => 1,
            _ => 0,
        }
    }

    /// Smallest positive imaginary pole and the spacing of the pole lattice
    /// on the imaginary axis (excluding the origin).
    pub fn imaginary_poles(&self) -> Option<(f64, f64)> {
        match self {
            Kernel::Bose => Some((TAU, TAU)),
            Kernel::Fermi => Some((PI, TAU)),
            _ => None,
        }
    }

    /// Minimum `Re α` for which the real-axis Mellin integral converges at 0.
    pub fn real_axis_threshold(&self) -> f64 {
        self.origin_pole_order() as f64
    }

    pub fn name(&self) -> String {
        match self {
            Kernel::Bose => "bose".into(),
            Kernel::Fermi => "fermi".into(),
            Kernel::Exp => "exp".into(),
            Kernel::ScaledExp(c) => format!("scaled_exp({c})"),
            Kernel::Trace(s) => format!("trace({s})"),
        }
    }

    /// Radius of convergence of the Taylor series of `g^p K(g)` at 0.
    fn taylor_radius(&self) -> f64 {
        match self {
            Kernel::Bose => TAU,
            Kernel::Fermi => PI,
            _ => f64::INFINITY,
        }
    }

    /// Taylor coefficients of `g^p K(g)` at the origin, `p = origin_pole_order`.
    pub(crate) fn taylor(&self, terms: usize) -> Vec<f64> {
        match self {
            Kernel::Bose => bernoulli_over_factorial()[..terms].to_vec(),
            Kernel::Fermi => {
                let b = bernoulli_over_factorial();
                (0..terms)
                    .map(|m| b[m + 1] * (1.0 - 2f64.powi(m as i32 + 1)))
                    .collect()
            }
            Kernel::Exp => exp_taylor(&[1.0], terms),
            Kernel::ScaledExp(c) => exp_taylor(&[*c], terms),
            Kernel::Trace(s) => {
                let values: Vec<f64> = s.values().collect();
                exp_taylor(&values, terms)
            }
        }
    }

    /// Split point `a` below which the real-axis integral is done by term-wise
    /// integration of the Taylor series.
    pub(crate) fn series_split(&self) -> f64 {
        let a: f64 = match self {
            Kernel::ScaledExp(c) => 1.0 / *c,
            Kernel::Trace(s) => 1.0 / s.max(),
            _ => 1.0,
        };
        a.min(1.0).min(self.taylor_radius() / 3.0)
    }
}

fn exp_taylor(rates: &[f64], terms: usize) -> Vec<f64> {
    let mut out = vec![0.0; terms];
    for &e in rates {
        let mut t = 1.0;
        for (m, slot) in out.iter_mut().enumerate() {
            if m > 0 {
                t *= -e / m as f64;
            }
            *slot += t;
        }
    }
    out
}

pub(crate) const TAYLOR_TERMS: usize = 90;

/// `B_n / n!` for n = 0..=TAYLOR_TERMS, the Taylor coefficients of g/(e^g − 1).
pub(crate) fn bernoulli_over_factorial() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n_max = TAYLOR_TERMS + 1;
        let mut b = vec![0.0; n_max + 1];
        b[0] = 1.0;
        b[1] = -0.5;
        for k in 1..=n_max / 2 {
            let z = zeta_even(k as i32);
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            b[2 * k] = sign * 2.0 * z / TAU.powi(2 * k as i32);
        }
        b
    })
}

// ζ(2k) by a direct sum with an Euler–Maclaurin tail.
fn zeta_even(k: i32) -> f64 {
    let s = 2 * k;
    let n = 1000.0f64;
    let mut sum = 0.0;
    for j in (1..=1000).rev() {
        sum += (j as f64).powi(-s);
    }
    let sf = s as f64;
    let tail = n.powf(1.0 - sf) / (sf - 1.0) - 0.5 * n.powf(-sf) + sf * n.powf(-sf - 1.0) / 12.0
        - sf * (sf + 1.0) * (sf + 2.0) * n.powf(-sf - 3.0) / 720.0;
    sum + tail
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_over_factorial();
        let fact = |n: u32| (1..=n).map(|k| k as f64).product::<f64>();
        let exact = [
            (2, 1.0 / 6.0),
            (4, -1.0 / 30.0),
            (6, 1.0 / 42.0),
            (10, 5.0 / 66.0),
            (20, -174_611.0 / 330.0),
        ];
        for (n, bn) in exact {
            let want = bn / fact(n);
            assert!((b[n as usize] - want).abs() <= 1e-14 * want.abs(), "B_{n}");
        }
        assert_eq!(b[3], 0.0);
    }

    #[test]
    fn taylor_series_reproduce_kernels() {
        let g: f64 = 0.4;
        for k in [Kernel::Bose, Kernel::Fermi, Kernel::Exp, Kernel::ScaledExp(2.5)] {
            let c = k.taylor(60);
            let series: f64 = c.iter().enumerate().map(|(m, cm)| cm * g.powi(m as i32)).sum();
            let p = k.origin_pole_order();
            let want = k.eval(Complex64::new(g, 0.0)).re * g.powi(p);
            assert!((series - want).abs() < 1e-15, "{k:?}");
        }
    }

    #[test]
    fn kernel_branches_agree() {
        for g in [Complex64::new(0.999, 0.3), Complex64::new(1.001, 0.3)] {
            let direct = (g.exp() - 1.0).inv();
            assert!((Kernel::Bose.eval(g) - direct).norm() < 1e-14);
        }
        let g = Complex64::new(-0.5, 1.0);
        assert!((Kernel::Fermi.eval(g) - (g.exp() + 1.0).inv()).norm() < 1e-15);
    }
}
