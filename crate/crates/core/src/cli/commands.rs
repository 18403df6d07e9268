use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::json;

use crate::cli::args::{CountArgs, EvalSettings, Method, SweepArgs, ZerosArgs};
use crate::cli::output::Record;
use crate::error::Result;
use crate::mellin::{eta_factor, mellin, Domain, Kernel, NormalizationKind, QuadOptions};
use crate::quad::QuadratureResult;
use crate::zeta::{
    count_zeros_rectangle, eta_hankel, eta_mellin_real, eta_series, find_zeros, zeta_hankel, zeta_mellin_real,
    zeta_ref, EtaMode, Func, REF_TOL,
};

fn kernel_for(func: Func) -> Kernel {
    match func {
        Func::Zeta => Kernel::Bose,
        Func::Eta => Kernel::Fermi,
    }
}

/// Evaluate one point; returns the result and the normalization name used.
pub fn evaluate(settings: &EvalSettings, alpha: Complex64) -> Result<(QuadratureResult, String)> {
    let opts = QuadOptions {
        rel_tol: settings.tol,
        ..QuadOptions::default()
    };
    let spec = settings.contour.spec();
    let policy = settings.near_integer.into();
    let (q, norm) = match settings.method {
        Method::Series => {
            let v = match settings.func {
                Func::Zeta => zeta_ref(alpha)?,
                Func::Eta => eta_series(alpha, settings.tol)?,
            };
            let mut q = QuadratureResult::exact(v);
            q.err_estimate = match settings.func {
                Func::Zeta => REF_TOL * v.norm().max(1.0) / eta_factor(alpha).norm().min(1.0),
                Func::Eta => settings.tol * v.norm().max(1.0),
            };
            (q, "none".to_string())
        }
        Method::MellinReal => match (settings.norm, settings.func) {
            (None, Func::Zeta) => (zeta_mellin_real(alpha, opts)?, NormalizationKind::Gamma.to_string()),
            (None, Func::Eta) => (
                eta_mellin_real(alpha, EtaMode::Corrected, opts)?,
                NormalizationKind::EtaGammaCorrected.to_string(),
            ),
            (Some(n), f) => (mellin(&kernel_for(f), alpha, n, &Domain::real_axis(), opts)?, n.to_string()),
        },
        Method::Hankel => match (settings.norm, settings.func) {
            (None | Some(NormalizationKind::HankelGamma), Func::Zeta) => (
                zeta_hankel(alpha, &spec, policy, opts)?,
                NormalizationKind::HankelGamma.to_string(),
            ),
            (None | Some(NormalizationKind::HankelGamma), Func::Eta) => (
                eta_hankel(alpha, &spec, policy, opts)?,
                NormalizationKind::HankelGamma.to_string(),
            ),
            (Some(n), f) => (mellin(&kernel_for(f), alpha, n, &Domain::Hankel(spec), opts)?, n.to_string()),
        },
    };
    Ok((q, norm))
}

pub fn eval_record(input: serde_json::Value, settings: &EvalSettings, alpha: Complex64) -> Result<Record> {
    let (q, norm) = evaluate(settings, alpha)?;
    Ok(Record::from_quadrature(input, alpha, q, settings.method.name(), &norm))
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

pub fn sweep_points(a: &SweepArgs) -> Vec<Complex64> {
    let mut points = a.alpha.clone();
    if let (Some(lo), Some(hi)) = (a.re_min, a.re_max) {
        for re in linspace(lo, hi, a.re_steps) {
            for im in linspace(a.im_min, a.im_max, a.im_steps) {
                points.push(Complex64::new(re, im));
            }
        }
    }
    points
}

pub fn sweep_records(input: serde_json::Value, a: &SweepArgs) -> Result<Vec<Record>> {
    let points = sweep_points(a);
    let results: Vec<Result<Record>> = points
        .par_iter()
        .map(|&alpha| {
            let r = eval_record(input.clone(), &a.settings, alpha)?;
            Ok(r.with_details(json!({ "alpha": { "re": alpha.re, "im": alpha.im } })))
        })
        .collect();
    results.into_iter().collect()
}

pub fn zeros_records(input: serde_json::Value, a: &ZerosArgs) -> Result<Vec<Record>> {
    find_zeros(a.t_min, a.t_max, a.max_count)?
        .into_iter()
        .map(|z| {
            let alpha = z.alpha();
            let value = zeta_ref(alpha)?;
            let width = z.bracket.1 - z.bracket.0;
            let details = serde_json::to_value(z).unwrap_or_default();
            Ok(Record::new(input.clone(), alpha, value, width, Vec::new(), "z-sign-change", "none").with_details(details))
        })
        .collect()
}

pub fn count_record(input: serde_json::Value, a: &CountArgs) -> Result<Record> {
    let n = count_zeros_rectangle(a.re_lo, a.re_hi, a.t_lo, a.t_hi)?;
    let corner = Complex64::new(a.re_lo, a.t_lo);
    Ok(
        Record::new(input, corner, Complex64::new(n as f64, 0.0), 0.0, Vec::new(), "argument-principle", "none")
            .with_details(json!({
                "count": n,
                "rectangle": { "re_lo": a.re_lo, "re_hi": a.re_hi, "t_lo": a.t_lo, "t_hi": a.t_hi },
            })),
    )
}
