//! Globally adaptive Gauss–Kronrod (7/15) quadrature for complex integrands
//! of a real parameter.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub const NODES_PER_PANEL: usize = 15;

/// Value of a quadrature together with its a-posteriori error estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub err_estimate: f64,
    pub nodes_used: usize,
    pub warnings: Vec<String>,
    /// |value at doubled node count − value|, when the doubling check was run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub doubling_delta: Option<f64>,
}

impl QuadratureResult {
    pub fn exact(value: Complex64) -> Self {
        QuadratureResult {
            value,
            err_estimate: 0.0,
            nodes_used: 0,
            warnings: Vec::new(),
            doubling_delta: None,
        }
    }

    /// Multiply by a constant weight, scaling the error estimate alike.
    pub fn scaled(mut self, w: Complex64) -> Self {
        self.value *= w;
        self.err_estimate *= w.norm();
        self.doubling_delta = self.doubling_delta.map(|d| d * w.norm());
        self
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        let w = w.into();
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
    }

    /// Sum of two independent pieces.
    pub fn combine(mut self, other: QuadratureResult) -> Self {
        self.value += other.value;
        self.err_estimate += other.err_estimate;
        self.nodes_used += other.nodes_used;
        self.doubling_delta = match (self.doubling_delta, other.doubling_delta) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
        for w in other.warnings {
            self.warn(w);
        }
        self
    }
}

/// Tolerances and budget for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_nodes: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    abs: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Outcome of an adaptive run, with the final partition retained so the
/// caller can recompute at twice the node count.
#[derive(Debug, Clone)]
pub struct Adaptive {
    pub value: Complex64,
    pub err: f64,
    pub abs_integral: f64,
    pub nodes: usize,
    pub converged: bool,
    panels: Vec<(f64, f64)>,
}

impl Adaptive {
    /// Re-evaluate with every final panel bisected (twice the nodes).
    pub fn doubled<F: Fn(f64) -> Complex64>(&self, f: &F) -> Complex64 {
        self.panels
            .iter()
            .map(|&(a, b)| {
                let m = 0.5 * (a + b);
                kronrod(f, a, m).value + kronrod(f, m, b).value
            })
            .sum()
    }

    pub fn panels(&self) -> usize {
        self.panels.len()
    }
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = fc.norm() * WGK[7];
    let mut fv1 = [Complex64::new(0.0, 0.0); 7];
    let mut fv2 = [Complex64::new(0.0, 0.0); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += (f1 + f2) * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            res_g += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let h = half.abs();
    let value = res_k * half;
    res_abs *= h;
    res_asc *= h;
    let mut err = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    err = err.max(50.0 * f64::EPSILON * res_abs);
    Panel {
        a,
        b,
        value,
        err,
        abs: res_abs,
    }
}

/// Integrate `f` over the union of the intervals between consecutive
/// `breaks`, bisecting the worst panel until the tolerance or node budget
/// is reached.
pub fn integrate<F: Fn(f64) -> Complex64>(f: &F, breaks: &[f64], tol: Tolerance) -> Adaptive {
    assert!(breaks.len() >= 2, "need at least one interval");
    let mut heap: BinaryHeap<Panel> = breaks
        .windows(2)
        .map(|w| kronrod(f, w[0], w[1]))
        .collect();
    let mut nodes = heap.len() * NODES_PER_PANEL;
    let mut finished: Vec<Panel> = Vec::new();

    let totals = |heap: &BinaryHeap<Panel>, done: &[Panel]| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut e = 0.0;
        for p in heap.iter().chain(done.iter()) {
            v += p.value;
            e += p.err;
        }
        (v, e)
    };

    let (mut value, mut err) = totals(&heap, &finished);
    let mut iterations = 0usize;
    while err > tol.abs.max(tol.rel * value.norm()) {
        if nodes + 2 * NODES_PER_PANEL > tol.max_nodes {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        let m = 0.5 * (worst.a + worst.b);
        if (worst.b - worst.a).abs() <= 1e-13 * worst.a.abs().max(worst.b.abs()).max(1e-300) {
            finished.push(worst);
            continue;
        }
        let left = kronrod(f, worst.a, m);
        let right = kronrod(f, m, worst.b);
        nodes += 2 * NODES_PER_PANEL;
        value += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        iterations += 1;
        if iterations.is_multiple_of(64) {
            (value, err) = totals(&heap, &finished);
        }
    }
    let (value, err) = totals(&heap, &finished);
    let abs_integral = heap.iter().chain(finished.iter()).map(|p| p.abs).sum();
    let converged = err <= tol.abs.max(tol.rel * value.norm());
    let mut panels: Vec<(f64, f64)> = heap
        .iter()
        .chain(finished.iter())
        .map(|p| (p.a, p.b))
        .collect();
    panels.sort_by(|x, y| x.0.total_cmp(&y.0));
    Adaptive {
        value,
        err,
        abs_integral,
        nodes,
        converged,
        panels,
    }
}
