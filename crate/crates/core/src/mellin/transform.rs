use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mellin::contour::{ContourSpec, Path, DEFAULT_NODES_PER_SEGMENT, DEFAULT_TRUNCATION};
use crate::mellin::kernel::{Kernel, TAYLOR_TERMS};
use crate::mellin::normalization::NormalizationKind;
use crate::quad::{self, Adaptive, QuadratureResult, Tolerance};
use crate::special::cpow_unchecked;

/// Knobs shared by the contour and real-axis integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub rel_tol: f64,
    /// Also recompute on the bisected final partition and report the change.
    pub doubling_check: bool,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            rel_tol: 1e-13,
            doubling_check: false,
        }
    }
}

/// Integration domain of a Mellin transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// `(0, ∞)`, with optional explicit truncation.
    RealAxis { truncation: Option<f64> },
    Hankel(ContourSpec),
}

impl Domain {
    pub fn real_axis() -> Self {
        Domain::RealAxis { truncation: None }
    }

    pub fn hankel() -> Self {
        Domain::Hankel(ContourSpec::default())
    }
}

// Roundoff floor relative to ∫|f| below which error targets are not pursued.
const ROUNDOFF_REL: f64 = 1e-14;
// Non-converged results within this factor of the target become warnings.
const RELAXED_FACTOR: f64 = 1e3;

fn run_adaptive<F: Fn(f64) -> Complex64 + Sync>(
    f: &F,
    breaks: &[f64],
    budget: usize,
    opts: QuadOptions,
    what: &str,
) -> Result<QuadratureResult> {
    let tol = Tolerance {
        abs: 0.0,
        rel: opts.rel_tol,
        max_nodes: budget,
    };
    let first = quad::integrate(f, breaks, tol);
    let floor = ROUNDOFF_REL * first.abs_integral;
    let ad: Adaptive = if !first.converged && first.err > floor {
        quad::integrate(
            f,
            breaks,
            Tolerance {
                abs: floor,
                ..tol
            },
        )
    } else {
        first
    };
    let target = (opts.rel_tol * ad.value.norm()).max(ROUNDOFF_REL * ad.abs_integral);
    if !ad.value.re.is_finite() || !ad.value.im.is_finite() {
        return Err(Error::Accuracy {
            message: format!("{what}: non-finite integrand"),
            estimate: f64::INFINITY,
            target,
        });
    }
    let mut out = QuadratureResult {
        value: ad.value,
        err_estimate: ad.err,
        nodes_used: ad.nodes,
        warnings: Vec::new(),
        doubling_delta: None,
    };
    if ad.err > target {
        if ad.err > RELAXED_FACTOR * target {
            return Err(Error::Accuracy {
                message: format!("{what}: node budget {budget} exhausted"),
                estimate: ad.err,
                target,
            });
        }
        out.warn("quadrature-tolerance-relaxed");
    }
    if opts.doubling_check {
        let delta = (ad.doubled(f) - ad.value).norm();
        if delta > 10.0 * ad.err.max(target) {
            return Err(Error::Accuracy {
                message: format!("{what}: doubling the nodes moved the result by {delta:.3e}"),
                estimate: ad.err,
                target,
            });
        }
        out.doubling_delta = Some(delta);
    }
    Ok(out)
}

/// Raw `∫_C K(g) g^{α−1} dg` along a Hankel path, with the power taken on the
/// path's branch sheet. No normalization weight is applied.
pub fn integrate_contour(
    path: &Path,
    kernel: &Kernel,
    alpha: Complex64,
    opts: QuadOptions,
) -> Result<QuadratureResult> {
    path.check_poles(kernel)?;
    let branch = path.branch;
    let mut total = QuadratureResult::exact(Complex64::new(0.0, 0.0));
    for (k, seg) in path.segments.iter().enumerate() {
        let (_, hi, sign) = seg.interval();
        let f = |s: f64| {
            let p = seg.point(s);
            let (base, angle) = branch.base_and_angle(p.g, p.angle);
            kernel.eval(p.g) * cpow_unchecked(base, alpha, angle) / p.g * p.dg * sign
        };
        let name = ["upper ray", "circle", "lower ray"][k];
        let mut part = run_adaptive(&f, &seg.breaks(), path.nodes_per_segment, opts, name)?;
        if k != 1 {
            // Discarded tail beyond R, bounded by |f(R)| / decay rate.
            let rate = kernel.decay_rate() * path.ray_angle.cos();
            let tail = f(hi).norm() / rate;
            part.err_estimate += tail;
        }
        total = total.combine(part);
    }
    Ok(total)
}

/// Automatic real-axis truncation for a kernel and `α`.
pub fn default_truncation(kernel: &Kernel, alpha: Complex64) -> f64 {
    let s = alpha.re.max(0.0);
    (s * (s + 2.0).ln() + 40.0).max(DEFAULT_TRUNCATION) / kernel.decay_rate()
}

/// Raw `∫_0^∞ K(g) g^{α−1} dg`.
///
/// `[0, a]` is integrated term-wise from the Taylor series of `g^p K(g)`
/// (`p` the pole order of `K` at 0), so the endpoint singularity `g^{α−1−p}`
/// is handled exactly; `[a, R]` goes to adaptive quadrature.
pub fn integrate_real_axis(
    kernel: &Kernel,
    alpha: Complex64,
    truncation: Option<f64>,
    opts: QuadOptions,
) -> Result<QuadratureResult> {
    let threshold = kernel.real_axis_threshold();
    if alpha.re <= threshold {
        return Err(Error::Domain(format!(
            "real-axis Mellin integral of the {} kernel needs Re α > {threshold}, got {alpha}",
            kernel.name()
        )));
    }
    let a = kernel.series_split();
    let big_r = truncation.unwrap_or_else(|| default_truncation(kernel, alpha));
    if big_r <= a {
        return Err(Error::Config(format!("truncation {big_r} below split point {a}")));
    }

    let series = series_head(kernel, alpha, a)?;

    let mut breaks = vec![a];
    let mut x = a;
    while x * 2.0 < big_r.min(8.0) {
        x *= 2.0;
        breaks.push(x);
    }
    while x + 4.0 < big_r {
        x += 4.0;
        breaks.push(x);
    }
    breaks.push(big_r);

    let exponent = alpha - 1.0;
    let f = |g: f64| kernel.eval(Complex64::new(g, 0.0)) * (exponent * g.ln()).exp();
    let mut body = run_adaptive(&f, &breaks, DEFAULT_NODES_PER_SEGMENT, opts, "real axis")?;
    body.err_estimate += f(big_r).norm() / kernel.decay_rate();
    Ok(series.combine(body))
}

fn series_head(kernel: &Kernel, alpha: Complex64, a: f64) -> Result<QuadratureResult> {
    let coeffs = kernel.taylor(TAYLOR_TERMS);
    let p = kernel.origin_pole_order() as f64;
    let ln_a = a.ln();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut small_run = 0;
    for (m, c) in coeffs.iter().enumerate() {
        if *c == 0.0 {
            continue;
        }
        let e = alpha - p + m as f64;
        let term = *c * (e * ln_a).exp() / e;
        sum += term;
        last = term.norm();
        if last <= 1e-18 * sum.norm() {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let mut out = QuadratureResult::exact(sum);
    out.err_estimate = last;
    if small_run < 3 && last > 1e-15 * sum.norm() {
        out.warn("series-head-truncated");
    }
    Ok(out)
}

/// Normalized Mellin transform `weight(α) × ∫ K(g) g^{α−1} dg` over `domain`.
pub fn mellin(
    kernel: &Kernel,
    alpha: Complex64,
    norm: NormalizationKind,
    domain: &Domain,
    opts: QuadOptions,
) -> Result<QuadratureResult> {
    let weight = norm.weight(alpha)?;
    let raw = match domain {
        Domain::RealAxis { truncation } => integrate_real_axis(kernel, alpha, *truncation, opts)?,
        Domain::Hankel(spec) => {
            let path = spec.adapted(alpha, kernel).path()?;
            integrate_contour(&path, kernel, alpha, opts)?
        }
    };
    let mut out = raw.scaled(weight);
    if let Some(w) = norm.near_pole_warning(alpha) {
        out.warn(w);
    }
    if !(out.value.re.is_finite() && out.value.im.is_finite()) {
        return Err(Error::Overflow(format!("Mellin transform at {alpha} is not finite")));
    }
    Ok(out)
}

/// Value at `center` of an analytic function, as the mean of its values on a
/// ring of `points` equally spaced nodes of the given radius.
///
/// The error estimate adds the spread between the full ring and its
/// even-indexed half to the propagated node errors.
pub fn ring_mean<F>(center: Complex64, radius: f64, points: usize, f: F) -> Result<QuadratureResult>
where
    F: Fn(Complex64) -> Result<QuadratureResult> + Sync,
{
    assert!(points >= 4 && points.is_multiple_of(2));
    let offset = std::f64::consts::PI / points as f64;
    let results: Vec<QuadratureResult> = (0..points)
        .into_par_iter()
        .map(|k| {
            let phi = offset + std::f64::consts::TAU * k as f64 / points as f64;
            f(center + Complex64::from_polar(radius, phi))
        })
        .collect::<Result<_>>()?;
    let n = points as f64;
    let full: Complex64 = results.iter().map(|r| r.value).sum::<Complex64>() / n;
    let half: Complex64 = results.iter().step_by(2).map(|r| r.value).sum::<Complex64>() / (n / 2.0);
    let mut out = QuadratureResult::exact(full);
    out.err_estimate = results.iter().map(|r| r.err_estimate).sum::<f64>() / n + (full - half).norm();
    out.nodes_used = results.iter().map(|r| r.nodes_used).sum();
    if results.iter().all(|r| r.doubling_delta.is_some()) {
        out.doubling_delta = Some(results.iter().filter_map(|r| r.doubling_delta).sum::<f64>() / n);
    }
    for r in results {
        for w in r.warnings {
            if w != "near-pole-normalization" {
                out.warn(w);
            }
        }
    }
    Ok(out)
}
