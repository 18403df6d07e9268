//! Critical-line zeros from sign changes of the Hardy Z-function, and zero
//! counts in rectangles by the argument principle.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mellin::{eta_factor, ContourSpec, QuadOptions};
use crate::special::log_gamma;
use crate::zeta::representations::{zeta_hankel, NearIntegerPolicy};
use crate::zeta::series::zeta_ref;

/// Grid spacing for Z sign changes.
pub const SCAN_STEP: f64 = 0.05;
/// Final bracket width of the bisection.
pub const BISECTION_WIDTH: f64 = 1e-10;
/// Largest |ζ| accepted at a located zero.
pub const MAX_ZERO_RESIDUAL: f64 = 1e-6;
/// Smallest |ζ| tolerated on a counting boundary.
pub const MIN_BOUNDARY_MODULUS: f64 = 1e-8;

// Half-extent of the rectangle used to confirm each located zero.
const CONFIRM_HALF_WIDTH: f64 = 0.05;
const CONFIRM_HALF_HEIGHT: f64 = 0.02;
// Step refinement target and hard limit for adjacent phase differences.
const PHASE_TARGET: f64 = PI / 4.0;
const PHASE_LIMIT: f64 = PI / 2.0;
const MAX_REFINE_DEPTH: u32 = 30;
// Below this |1 − 2^{1−α}| the η-based reference is replaced by the contour form.
const BOUNDARY_SWITCH: f64 = 1e-2;

/// A zero 1/2 + it on the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub t: f64,
    /// |ζ(1/2 + it)|
    pub residual: f64,
    pub bracket: (f64, f64),
    pub winding_confirmed: bool,
}

impl ZeroRecord {
    pub fn alpha(&self) -> Complex64 {
        Complex64::new(0.5, self.t)
    }
}

/// θ(t) = Im log Γ(1/4 + it/2) − (t/2) ln π.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Domain(format!("theta needs t >= 0, got {t}")));
    }
    let lg = log_gamma(Complex64::new(0.25, t / 2.0))?;
    Ok(lg.im - 0.5 * t * PI.ln())
}

/// Z(t) = e^{iθ(t)} ζ(1/2 + it), returned as a complex number whose
/// imaginary part is rounding noise.
pub fn hardy_z_complex(t: f64) -> Result<Complex64> {
    let theta = riemann_siegel_theta(t.abs())?;
    let z = zeta_ref(Complex64::new(0.5, t.abs()))?;
    Ok(Complex64::from_polar(1.0, theta) * z)
}

pub fn hardy_z(t: f64) -> Result<f64> {
    Ok(hardy_z_complex(t)?.re)
}

/// ζ for counting purposes: the series reference, or the contour form close
/// to the zeros of 1 − 2^{1−α} on Re α = 1.
pub fn zeta_for_counting(alpha: Complex64) -> Result<Complex64> {
    if eta_factor(alpha).norm() < BOUNDARY_SWITCH {
        let spec = ContourSpec::default();
        return Ok(zeta_hankel(alpha, &spec, NearIntegerPolicy::Ring, QuadOptions::default())?.value);
    }
    zeta_ref(alpha)
}

/// Critical-line zeros with ordinates in `(t_min, t_max)`, sorted, at most
/// `max_count` of them.
pub fn find_zeros(t_min: f64, t_max: f64, max_count: usize) -> Result<Vec<ZeroRecord>> {
    if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
        return Err(Error::Domain(format!(
            "zero search needs 0 < t_min < t_max, got ({t_min}, {t_max})"
        )));
    }
    let steps = ((t_max - t_min) / SCAN_STEP).ceil() as usize;
    let h = (t_max - t_min) / steps as f64;
    let grid: Vec<f64> = (0..=steps).map(|k| t_min + h * k as f64).collect();
    let values: Vec<f64> = grid.par_iter().map(|&t| hardy_z(t)).collect::<Result<_>>()?;

    let brackets: Vec<(f64, f64, f64)> = (0..steps)
        .filter(|&k| (values[k] < 0.0) != (values[k + 1] < 0.0))
        .map(|k| (grid[k], grid[k + 1], values[k]))
        .collect();

    let mut zeros: Vec<ZeroRecord> = brackets
        .par_iter()
        .map(|&(lo, hi, z_lo)| refine(lo, hi, z_lo))
        .collect::<Result<_>>()?;
    zeros.sort_by(|a, b| a.t.total_cmp(&b.t));
    zeros.truncate(max_count);
    Ok(zeros)
}

fn refine(mut lo: f64, mut hi: f64, z_lo: f64) -> Result<ZeroRecord> {
    let lo_negative = z_lo < 0.0;
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (hardy_z(mid)? < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    let residual = zeta_ref(Complex64::new(0.5, t))?.norm();
    if residual >= MAX_ZERO_RESIDUAL {
        return Err(Error::Accuracy {
            message: format!("sign change near t = {t} is not a zero"),
            estimate: residual,
            target: MAX_ZERO_RESIDUAL,
        });
    }
    let winding = count_zeros_rectangle(
        0.5 - CONFIRM_HALF_WIDTH,
        0.5 + CONFIRM_HALF_WIDTH,
        t - CONFIRM_HALF_HEIGHT,
        t + CONFIRM_HALF_HEIGHT,
    )?;
    Ok(ZeroRecord {
        t,
        residual,
        bracket: (lo, hi),
        winding_confirmed: winding == 1,
    })
}

/// Number of zeros of ζ (minus poles) inside `[re_lo, re_hi] × [t_lo, t_hi]`.
pub fn count_zeros_rectangle(re_lo: f64, re_hi: f64, t_lo: f64, t_hi: f64) -> Result<i64> {
    if (re_lo..=re_hi).contains(&1.0) && (t_lo..=t_hi).contains(&0.0) {
        return Err(Error::Domain("rectangle contains the pole at 1".into()));
    }
    count_zeros_with(re_lo, re_hi, t_lo, t_hi, zeta_for_counting)
}

/// Winding number of `f` around 0 along the boundary of a rectangle,
/// traversed counter-clockwise.
pub fn count_zeros_with<F>(re_lo: f64, re_hi: f64, t_lo: f64, t_hi: f64, f: F) -> Result<i64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    let bounds = [re_lo, re_hi, t_lo, t_hi];
    if bounds.iter().any(|b| !b.is_finite()) || re_lo >= re_hi || t_lo >= t_hi {
        return Err(Error::Domain(format!("degenerate rectangle {bounds:?}")));
    }
    let corners = [
        Complex64::new(re_lo, t_lo),
        Complex64::new(re_hi, t_lo),
        Complex64::new(re_hi, t_hi),
        Complex64::new(re_lo, t_hi),
    ];
    let mut total = 0.0;
    for k in 0..4 {
        total += edge_phase(corners[k], corners[(k + 1) % 4], &f)?;
    }
    let winding = total / TAU;
    let n = winding.round();
    if (winding - n).abs() > 0.05 {
        return Err(Error::PhaseTracking {
            at: corners[0],
            message: format!("winding {winding:.4} is not close to an integer"),
        });
    }
    Ok(n as i64)
}

fn checked<F>(f: &F, z: Complex64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let v = f(z)?;
    if v.norm() < MIN_BOUNDARY_MODULUS {
        return Err(Error::BoundaryZero {
            at: z,
            modulus: v.norm(),
        });
    }
    Ok(v)
}

fn edge_phase<F>(a: Complex64, b: Complex64, f: &F) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    let n = (((b - a).norm() / SCAN_STEP).ceil() as usize).max(4);
    let points: Vec<Complex64> = (0..=n).map(|k| a + (b - a) * (k as f64 / n as f64)).collect();
    let values: Vec<Complex64> = points.par_iter().map(|&z| checked(f, z)).collect::<Result<_>>()?;
    let mut total = 0.0;
    for k in 0..n {
        total += phase_step(points[k], values[k], points[k + 1], values[k + 1], f, 0)?;
    }
    Ok(total)
}

fn phase_step<F>(za: Complex64, fa: Complex64, zb: Complex64, fb: Complex64, f: &F, depth: u32) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let d = (fb / fa).arg();
    if d.abs() < PHASE_TARGET {
        return Ok(d);
    }
    if depth >= MAX_REFINE_DEPTH {
        if d.abs() < PHASE_LIMIT {
            return Ok(d);
        }
        return Err(Error::PhaseTracking {
            at: za,
            message: format!("phase jump {d:.3} persists at step {:.2e}", (zb - za).norm()),
        });
    }
    let zm = 0.5 * (za + zb);
    let fm = checked(f, zm)?;
    Ok(phase_step(za, fa, zm, fm, f, depth + 1)? + phase_step(zm, fm, zb, fb, f, depth + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIRST_ZEROS: [f64; 10] = [
        14.134725141734694,
        21.022039638771555,
        25.010857580145689,
        30.424876125859513,
        32.935061587739190,
        37.586178158825671,
        40.918719012147495,
        43.327073280914999,
        48.005150881167160,
        49.773832477672302,
    ];

    #[test]
    fn theta_and_z_reference() {
        assert_eq!(riemann_siegel_theta(0.0).unwrap(), 0.0);
        assert!((riemann_siegel_theta(10.0).unwrap() + 3.0670743962898953).abs() < 1e-12);
        let z = hardy_z_complex(10.0).unwrap();
        assert!(z.im.abs() < 1e-9);
        assert!((z.re + 1.5491945461810224).abs() < 1e-11);
        let mut prev = riemann_siegel_theta(10.0).unwrap();
        for k in 1..=400 {
            let cur = riemann_siegel_theta(10.0 + 0.1 * k as f64).unwrap();
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn find_zeros_examples() {
        let z = find_zeros(1.0, 15.0, 10).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0].t - FIRST_ZEROS[0]).abs() < 1e-6);
        assert!(z[0].winding_confirmed);
        assert!(z[0].bracket.0 < z[0].t && z[0].t < z[0].bracket.1);
        assert!(z[0].bracket.1 - z[0].bracket.0 < 1e-6);
        assert_eq!(find_zeros(1.0, 30.0, 10).unwrap().len(), 3);
        assert!(find_zeros(1.0, 5.0, 10).unwrap().is_empty());
        assert_eq!(find_zeros(1.0, 30.0, 2).unwrap().len(), 2);
    }

    #[test]
    fn zeros_up_to_fifty() {
        let z = find_zeros(1.0, 50.0, usize::MAX).unwrap();
        assert_eq!(z.len(), 10);
        for (rec, want) in z.iter().zip(FIRST_ZEROS) {
            assert!((rec.t - want).abs() < 1e-8, "{} vs {want}", rec.t);
            assert!(rec.residual < 1e-9);
            assert!(rec.winding_confirmed);
        }
    }

    #[test]
    fn rectangle_counts() {
        assert_eq!(count_zeros_rectangle(0.0, 1.0, 1.0, 30.0).unwrap(), 3);
        assert_eq!(count_zeros_rectangle(2.0, 3.0, 0.0, 50.0).unwrap(), 0);
        assert_eq!(count_zeros_rectangle(0.0, 1.0, 1.0, 10.0).unwrap(), 0);
    }

    #[test]
    fn rectangle_errors() {
        assert!(matches!(count_zeros_rectangle(0.5, 2.0, -1.0, 1.0), Err(Error::Domain(_))));
        let t0 = FIRST_ZEROS[0];
        assert!(matches!(
            count_zeros_rectangle(0.5, 1.0, t0, t0 + 1.0),
            Err(Error::BoundaryZero { .. })
        ));
    }

    #[test]
    fn winding_of_polynomial() {
        let f = |z: Complex64| Ok((z - Complex64::new(0.3, 0.2)) * (z - Complex64::new(2.0, 0.0)).powi(2));
        assert_eq!(count_zeros_with(0.0, 1.0, 0.0, 1.0, f).unwrap(), 1);
        assert_eq!(count_zeros_with(0.0, 3.0, -1.0, 1.0, f).unwrap(), 3);
    }
}
