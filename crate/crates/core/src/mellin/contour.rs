//! Hankel contour geometry.
//!
//! The path comes in from `+∞` on the upper ray, goes once counter-clockwise
//! around the origin on a circle of radius `r`, and returns to `+∞` on the
//! lower ray. With the default `ray_angle = 0` both rays lie on the positive
//! real axis (upper and lower edge of the cut). A positive ray angle `ψ` tilts
//! the rays to `arg g = ±ψ`; this is a deformation that crosses no kernel
//! pole, used to keep the integrand from overshooting the integral by
//! `e^{π|Im α|/2}` when `|Im α|` is large.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mellin::kernel::Kernel;
use crate::special::BranchConvention;

pub const DEFAULT_INNER_RADIUS: f64 = 1.0;
pub const DEFAULT_TRUNCATION: f64 = 40.0;
pub const DEFAULT_NODES_PER_SEGMENT: usize = 30_000;

/// Exponent budget: tilted rays are chosen so that the integrand exceeds the
/// integral by at most `e^{TILT_BUDGET}`.
const TILT_BUDGET: f64 = 3.0;
/// Required decay `R cos ψ · rate` beyond the magnitude bookkeeping.
const TAIL_DECAY: f64 = 40.0;
/// Minimum allowed distance between a tilted ray and a kernel pole.
const MIN_POLE_CLEARANCE: f64 = 0.3;
/// Keeps the automatic tilt strictly inside the clearance that `check_poles` enforces.
const CLEARANCE_MARGIN: f64 = 1.25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// From +∞ above the axis, counter-clockwise around 0, back to +∞ below.
    #[default]
    AboveFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    pub inner_radius: f64,
    /// Ray endpoint modulus `R`; `None` selects it from `α` and the kernel.
    pub truncation: Option<f64>,
    /// Ray tilt `ψ` in radians; `None` selects it from `Im α`.
    pub ray_angle: Option<f64>,
    pub nodes_per_segment: usize,
    pub branch: BranchConvention,
    pub orientation: Orientation,
}

impl Default for ContourSpec {
    fn default() -> Self {
        ContourSpec {
            inner_radius: DEFAULT_INNER_RADIUS,
            truncation: None,
            ray_angle: None,
            nodes_per_segment: DEFAULT_NODES_PER_SEGMENT,
            branch: BranchConvention::Symmetric,
            orientation: Orientation::AboveFirst,
        }
    }
}

impl ContourSpec {
    pub fn new(inner_radius: f64, truncation: f64) -> Self {
        ContourSpec {
            inner_radius,
            truncation: Some(truncation),
            ..Default::default()
        }
    }

    pub fn with_branch(mut self, branch: BranchConvention) -> Self {
        self.branch = branch;
        self
    }

    pub fn with_ray_angle(mut self, psi: f64) -> Self {
        self.ray_angle = Some(psi);
        self
    }

    /// Fill the automatic fields for a particular `α` and kernel.
    pub fn adapted(&self, alpha: Complex64, kernel: &Kernel) -> ContourSpec {
        let t = alpha.im.abs();
        let sigma = alpha.re;
        let rate = kernel.decay_rate();

        let psi = self.ray_angle.unwrap_or_else(|| {
            let mut psi = if t * FRAC_PI_2 > TILT_BUDGET {
                FRAC_PI_2 - TILT_BUDGET / t
            } else {
                0.0
            };
            if let Some((first, _)) = kernel.imaginary_poles() {
                let clearance = CLEARANCE_MARGIN * MIN_POLE_CLEARANCE.max(0.5 * self.inner_radius);
                psi = psi.min((clearance / first).acos());
            }
            if let Some(r) = self.truncation {
                let need = (TAIL_DECAY - 10.0) / rate;
                psi = if r > need { psi.min((need / r).acos()) } else { 0.0 };
            }
            psi
        });

        let truncation = self.truncation.unwrap_or_else(|| {
            let s = sigma.max(0.0);
            let base = (s * (s + 2.0).ln() + TAIL_DECAY).max(DEFAULT_TRUNCATION) + TILT_BUDGET;
            (base / (psi.cos() * rate)).max(2.0 * self.inner_radius)
        });

        ContourSpec {
            truncation: Some(truncation),
            ray_angle: Some(psi),
            ..*self
        }
    }

    /// Lay out the path. Unset automatic fields fall back to `R = 40`, `ψ = 0`.
    pub fn path(&self) -> Result<Path> {
        build_hankel(self)
    }
}

/// One sample of the path: the point, its continuous angle, and `dg/ds`.
#[derive(Debug, Clone, Copy)]
pub struct PathPoint {
    pub g: Complex64,
    pub angle: f64,
    pub dg: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    /// `g = s e^{i angle}`, `s` running from `from` to `to`.
    Ray { angle: f64, from: f64, to: f64 },
    /// `g = radius e^{i s}`, `s` running from `from` to `to`.
    Arc { radius: f64, from: f64, to: f64 },
}

impl Segment {
    pub fn point(&self, s: f64) -> PathPoint {
        match *self {
            Segment::Ray { angle, .. } => {
                let dir = Complex64::from_polar(1.0, angle);
                PathPoint {
                    g: dir * s,
                    angle,
                    dg: dir,
                }
            }
            Segment::Arc { radius, .. } => {
                let g = Complex64::from_polar(radius, s);
                PathPoint {
                    g,
                    angle: s,
                    dg: Complex64::i() * g,
                }
            }
        }
    }

    /// Parameter interval in increasing order and the orientation sign.
    pub fn interval(&self) -> (f64, f64, f64) {
        let (from, to) = match *self {
            Segment::Ray { from, to, .. } | Segment::Arc { from, to, .. } => (from, to),
        };
        if from <= to {
            (from, to, 1.0)
        } else {
            (to, from, -1.0)
        }
    }

    pub fn start(&self) -> PathPoint {
        match *self {
            Segment::Ray { from, .. } | Segment::Arc { from, .. } => self.point(from),
        }
    }

    pub fn end(&self) -> PathPoint {
        match *self {
            Segment::Ray { to, .. } | Segment::Arc { to, .. } => self.point(to),
        }
    }

    /// Initial breakpoints for adaptive integration.
    pub(crate) fn breaks(&self) -> Vec<f64> {
        let (lo, hi, _) = self.interval();
        match self {
            Segment::Arc { .. } => {
                let n = 8;
                (0..=n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect()
            }
            Segment::Ray { .. } => {
                let mut b = vec![lo];
                let mut x = lo;
                while x * 2.0 < hi.min(8.0) {
                    x *= 2.0;
                    b.push(x);
                }
                let step = 4.0;
                while x + step < hi {
                    x += step;
                    b.push(x);
                }
                b.push(hi);
                b
            }
        }
    }
}

/// A fully laid-out Hankel path: upper ray, circle, lower ray.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    pub inner_radius: f64,
    pub truncation: f64,
    pub ray_angle: f64,
    pub nodes_per_segment: usize,
    pub branch: BranchConvention,
    pub segments: [Segment; 3],
}

impl Path {
    /// Increase of the continuous angle from the start of the upper ray to
    /// the end of the lower ray.
    pub fn total_winding(&self) -> f64 {
        self.segments[2].end().angle - self.segments[0].start().angle
    }

    /// Assigned branch angle increase `θ_lower − θ_upper` along the path.
    pub fn assigned_angle_increase(&self) -> f64 {
        let (_, a0) = self
            .branch
            .base_and_angle(self.segments[0].start().g, self.segments[0].start().angle);
        let (_, a1) = self
            .branch
            .base_and_angle(self.segments[2].end().g, self.segments[2].end().angle);
        a1 - a0
    }

    /// Minimum distance from the path to a point.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        self.segments
            .iter()
            .map(|seg| match *seg {
                Segment::Ray { angle, from, to } => {
                    let dir = Complex64::from_polar(1.0, angle);
                    let (lo, hi) = (from.min(to), from.max(to));
                    let proj = (p * dir.conj()).re.clamp(lo, hi);
                    (p - dir * proj).norm()
                }
                Segment::Arc { radius, from, to } => {
                    let phi = p.arg().rem_euclid(TAU);
                    let (lo, hi) = (from.min(to), from.max(to));
                    let on_arc = [phi, phi + TAU, phi - TAU]
                        .iter()
                        .any(|x| (lo..=hi).contains(x));
                    if on_arc && p.norm() > 0.0 {
                        (p.norm() - radius).abs()
                    } else {
                        let a = Complex64::from_polar(radius, lo);
                        let b = Complex64::from_polar(radius, hi);
                        (p - a).norm().min((p - b).norm())
                    }
                }
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Check that the path keeps at least `r/2` away from every off-origin
    /// pole of the kernel and that the circle encloses no pole but the origin.
    pub fn check_poles(&self, kernel: &Kernel) -> Result<()> {
        let Some((first, spacing)) = kernel.imaginary_poles() else {
            return Ok(());
        };
        if self.inner_radius >= first {
            return Err(Error::Config(format!(
                "inner radius {} encloses the kernel pole at {}i",
                self.inner_radius, first
            )));
        }
        let clearance = 0.5 * self.inner_radius;
        let mut y = first;
        while y <= self.truncation + first {
            for p in [Complex64::new(0.0, y), Complex64::new(0.0, -y)] {
                let d = self.distance_to(p);
                if d < clearance {
                    return Err(Error::Config(format!(
                        "path passes within {d:.3} of the kernel pole at {p}"
                    )));
                }
            }
            y += spacing;
        }
        Ok(())
    }
}

/// Build the Hankel path described by `spec`.
pub fn build_hankel(spec: &ContourSpec) -> Result<Path> {
    let r = spec.inner_radius;
    let big_r = spec.truncation.unwrap_or(DEFAULT_TRUNCATION);
    let psi = spec.ray_angle.unwrap_or(0.0);
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Config(format!("inner radius must be > 0, got {r}")));
    }
    if !(big_r.is_finite() && r < big_r) {
        return Err(Error::Config(format!(
            "need inner radius < truncation, got r = {r}, R = {big_r}"
        )));
    }
    if !(0.0..FRAC_PI_2).contains(&psi) {
        return Err(Error::Config(format!("ray angle must lie in [0, π/2), got {psi}")));
    }
    if spec.nodes_per_segment < 2 * crate::quad::NODES_PER_PANEL {
        return Err(Error::Config("node budget too small".into()));
    }
    let segments = [
        Segment::Ray {
            angle: psi,
            from: big_r,
            to: r,
        },
        Segment::Arc {
            radius: r,
            from: psi,
            to: TAU - psi,
        },
        Segment::Ray {
            angle: TAU - psi,
            from: r,
            to: big_r,
        },
    ];
    Ok(Path {
        inner_radius: r,
        truncation: big_r,
        ray_angle: psi,
        nodes_per_segment: spec.nodes_per_segment,
        branch: spec.branch,
        segments,
    })
}
