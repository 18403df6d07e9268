//! exp(tr M) = det(exp M) on explicit complex matrices.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DIMENSION: usize = 64;
/// |tr M| at or above which the direct comparison is refused.
pub const DIRECT_TRACE_LIMIT: f64 = 300.0;
const HERMITIAN_TOL: f64 = 1e-12;

/// Square complex matrix, optionally flagged Hermitian.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixOperand {
    entries: DMatrix<Complex64>,
    hermitian: bool,
}

impl MatrixOperand {
    pub fn new(entries: DMatrix<Complex64>, hermitian: bool) -> Result<Self> {
        let d = entries.nrows();
        if d == 0 || d != entries.ncols() {
            return Err(Error::Config(format!(
                "matrix must be square and non-empty, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        if d > MAX_DIMENSION {
            return Err(Error::Config(format!("dimension {d} exceeds {MAX_DIMENSION}")));
        }
        if entries.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::Config("matrix entries must be finite".into()));
        }
        if hermitian {
            let gap = (&entries - entries.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if gap >= HERMITIAN_TOL {
                return Err(Error::Config(format!("matrix flagged Hermitian but |M - M^H| = {gap:e}")));
            }
        }
        Ok(MatrixOperand { entries, hermitian })
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Result<Self> {
        let m = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(diag));
        let real = diag.iter().all(|z| z.im == 0.0);
        MatrixOperand::new(m, real)
    }

    pub fn dimension(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    /// exp M: eigendecomposition when flagged Hermitian, Padé(13)
    /// scaling-and-squaring otherwise.
    pub fn exp(&self) -> DMatrix<Complex64> {
        if self.hermitian {
            expm_hermitian(&self.entries)
        } else {
            expm(&self.entries)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpTrDet {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub rel_residual: f64,
    /// When set, `lhs` and `rhs` are logarithms.
    pub log_space: bool,
}

/// Compare exp(tr M) with det(exp M) directly.
///
/// Fails with `Overflow` when |tr M| ≥ 300; use [`exp_tr_det_check_log`].
pub fn exp_tr_det_check(m: &MatrixOperand) -> Result<ExpTrDet> {
    let tr = m.trace();
    if tr.norm() >= DIRECT_TRACE_LIMIT {
        return Err(Error::Overflow(format!(
            "|tr M| = {:.1} too large for a direct comparison",
            tr.norm()
        )));
    }
    let lhs = tr.exp();
    let rhs = m.exp().lu().determinant();
    Ok(ExpTrDet {
        lhs,
        rhs,
        rel_residual: (lhs - rhs).norm() / lhs.norm(),
        log_space: false,
    })
}

/// Compare tr M with log det(exp M), the latter evaluated on the
/// trace-free shift M − (tr M/d) I so that nothing overflows.
pub fn exp_tr_det_check_log(m: &MatrixOperand) -> Result<ExpTrDet> {
    let d = m.dimension();
    let tr = m.trace();
    let mu = tr / d as f64;
    let shifted = MatrixOperand {
        entries: &m.entries - DMatrix::<Complex64>::identity(d, d) * mu,
        hermitian: m.hermitian && mu.im == 0.0,
    };
    let det = shifted.exp().lu().determinant();
    if det.norm() == 0.0 || !det.norm().is_finite() {
        return Err(Error::Overflow("determinant of the shifted exponential left range".into()));
    }
    let rhs = mu * d as f64 + det.ln();
    // Logs agree modulo 2πi.
    let gap = crate::special::expm1(rhs - tr);
    Ok(ExpTrDet {
        lhs: tr,
        rhs,
        rel_residual: gap.norm(),
        log_space: true,
    })
}

/// Direct check, falling back to log space on overflow.
pub fn exp_tr_det_auto(m: &MatrixOperand) -> Result<ExpTrDet> {
    match exp_tr_det_check(m) {
        Err(Error::Overflow(_)) => exp_tr_det_check_log(m),
        r => r,
    }
}

fn norm1(a: &DMatrix<Complex64>) -> f64 {
    a.column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371_920_351_148_152;

/// Matrix exponential by scaling and squaring around a degree-13 Padé
/// approximant.
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let d = a.nrows();
    let id = DMatrix::<Complex64>::identity(d, d);
    let norm = norm1(a);
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let a = a * Complex64::new(0.5f64.powi(s), 0.0);
    let b = |k: usize| Complex64::new(PADE13[k], 0.0);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let u_inner = &a6 * (&a6 * b(13) + &a4 * b(11) + &a2 * b(9)) + &a6 * b(7) + &a4 * b(5) + &a2 * b(3) + &id * b(1);
    let u = &a * u_inner;
    let v = &a6 * (&a6 * b(12) + &a4 * b(10) + &a2 * b(8)) + &a6 * b(6) + &a4 * b(4) + &a2 * b(2) + &id * b(0);
    let p = &v + &u;
    let q = &v - &u;
    let mut r = q.lu().solve(&p).unwrap_or_else(|| DMatrix::from_element(d, d, Complex64::new(f64::NAN, 0.0)));
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

fn expm_hermitian(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let eig = SymmetricEigen::new(a.clone());
    let v = &eig.eigenvectors;
    let scaled = DMatrix::from_fn(v.nrows(), v.ncols(), |i, j| v[(i, j)] * eig.eigenvalues[j].exp());
    scaled * v.adjoint()
}

/// Families of random test matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFamily {
    /// Hermitian with entries in the unit square.
    Hermitian,
    /// Upper triangular with entries in the unit square.
    Triangular,
    /// General, scaled so the Frobenius norm (hence the spectral radius)
    /// stays below 3.
    General,
}

fn unit_square(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

pub fn random_matrix(family: MatrixFamily, d: usize, seed: u64) -> Result<MatrixOperand> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        MatrixFamily::Hermitian => {
            let mut m = DMatrix::from_fn(d, d, |_, _| Complex64::new(0.0, 0.0));
            for i in 0..d {
                m[(i, i)] = Complex64::new(rng.random_range(-1.0..=1.0), 0.0);
                for j in i + 1..d {
                    let z = unit_square(&mut rng);
                    m[(i, j)] = z;
                    m[(j, i)] = z.conj();
                }
            }
            MatrixOperand::new(m, true)
        }
        MatrixFamily::Triangular => {
            let mut m = DMatrix::from_element(d, d, Complex64::new(0.0, 0.0));
            for i in 0..d {
                for j in i..d {
                    m[(i, j)] = unit_square(&mut rng);
                }
            }
            MatrixOperand::new(m, false)
        }
        MatrixFamily::General => {
            let m = DMatrix::from_fn(d, d, |_, _| unit_square(&mut rng));
            let target = 3.0 * rng.random_range(0.1..0.95);
            let scale = target / m.norm();
            MatrixOperand::new(m * Complex64::new(scale, 0.0), false)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteCase {
    pub index: usize,
    pub family: MatrixFamily,
    pub dimension: usize,
    pub rel_residual: f64,
}

/// `count` random matrices cycling through the three families, dimensions
/// 1..=`max_dim`, all derived from `seed`. Results are in index order.
pub fn exp_tr_det_suite(seed: u64, count: usize, max_dim: usize) -> Result<Vec<SuiteCase>> {
    let families = [MatrixFamily::Hermitian, MatrixFamily::Triangular, MatrixFamily::General];
    (0..count)
        .into_par_iter()
        .map(|index| {
            let case_seed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64);
            let family = families[index % 3];
            let dimension = 1 + (case_seed % max_dim.max(1) as u64) as usize;
            let m = random_matrix(family, dimension, case_seed)?;
            let r = exp_tr_det_auto(&m)?;
            Ok(SuiteCase {
                index,
                family,
                dimension,
                rel_residual: r.rel_residual,
            })
        })
        .collect()
}
