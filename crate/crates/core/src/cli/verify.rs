use nalgebra::DMatrix;
use num_complex::Complex64;
use serde_json::json;

use crate::cli::args::{Check, VerifyArgs};
use crate::cli::output::Record;
use crate::error::Result;
use crate::identity::{
    exp_tr_det_check, exp_tr_det_suite, hc_relation_check, normalization_constant, theorem_residual, theorem_rhs,
    MatrixOperand, PhaseBranch,
};
use crate::mellin::{ContourSpec, Domain, NormalizationKind};
use crate::spectrum::Spectrum;
use crate::zeta::{find_zeros, involution_check, Func};

/// Points at which the normalization constant is checked.
pub const NORM_POINTS: [f64; 7] = [0.1, 0.25, 0.5, 0.75, 1.5, 2.48, 2.52];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Run one suite; the flag is true when every assertion held.
pub fn run_check(input: &serde_json::Value, a: &VerifyArgs) -> Result<(Vec<Record>, bool)> {
    let records = match a.check {
        Check::Norm => norm_suite(input, a)?,
        Check::ExpTrDet => exp_tr_det_records(input, a)?,
        Check::Theorem => theorem_suite(input, a)?,
        Check::Involution => involution_suite(input, a)?,
        Check::Hc => hc_suite(input, a)?,
    };
    let passed = records
        .iter()
        .all(|r| r.details.as_ref().and_then(|d| d["passed"].as_bool()).unwrap_or(false));
    Ok((records, passed))
}

fn norm_suite(input: &serde_json::Value, a: &VerifyArgs) -> Result<Vec<Record>> {
    let spec = ContourSpec::default();
    let mut alphas: Vec<Complex64> = NORM_POINTS.iter().map(|&x| c(x, 0.0)).collect();
    alphas.extend(a.alpha);
    alphas
        .into_iter()
        .map(|alpha| {
            let n = normalization_constant(alpha, &spec)?;
            let abs_err = (n.value - 1.0).norm();
            let details = json!({
                "alpha": { "re": alpha.re, "im": alpha.im },
                "value": { "re": n.value.re, "im": n.value.im },
                "abs_err": abs_err,
                "passed": abs_err < 1e-9,
            });
            Ok(Record::from_quadrature(input.clone(), alpha, n, "norm", "hankel-gamma").with_details(details))
        })
        .collect()
}

fn matrix_record(input: &serde_json::Value, label: &str, dimension: usize, rel: f64, limit: f64) -> Record {
    Record::new(input.clone(), c(0.0, 0.0), c(rel, 0.0), rel, Vec::new(), "exp-tr-det", label).with_details(json!({
        "family": label,
        "dimension": dimension,
        "rel_residual": rel,
        "passed": rel < limit,
    }))
}

fn exp_tr_det_records(input: &serde_json::Value, a: &VerifyArgs) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let diag = MatrixOperand::from_diagonal(&[c(1.0, 0.0), c(2.0, 0.0)])?;
    out.push(matrix_record(input, "diagonal", 2, exp_tr_det_check(&diag)?.rel_residual, 1e-12));
    for d in 1..=8 {
        let m = DMatrix::from_fn(d, d, |i, j| if j > i { c(1.0 + (i * d + j) as f64 / 10.0, 0.5) } else { c(0.0, 0.0) });
        let r = exp_tr_det_check(&MatrixOperand::new(m, false)?)?;
        let exact = (r.lhs - 1.0).norm().max((r.rhs - 1.0).norm());
        out.push(matrix_record(input, "nilpotent", d, exact, 1e-12));
    }
    for case in exp_tr_det_suite(a.seed, a.count, 8)? {
        let label = serde_json::to_value(case.family).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        out.push(matrix_record(input, &label, case.dimension, case.rel_residual, 1e-9));
    }
    Ok(out)
}

fn theorem_suite(input: &serde_json::Value, a: &VerifyArgs) -> Result<Vec<Record>> {
    let principal = PhaseBranch::principal();
    let user_phase = PhaseBranch::new(a.phase_n, a.phase_sign)?;
    let one = Spectrum::explicit(vec![1.0])?;
    let pair = Spectrum::explicit(vec![1.0, 2.0])?;
    let cases: Vec<(Spectrum, Complex64, PhaseBranch, Option<f64>)> = vec![
        (one, c(1.0, 0.0), principal, Some(-2.0)),
        (pair, c(2.0, 0.0), principal, Some(-7.25)),
        (a.spectrum.clone(), a.alpha.unwrap_or(c(0.5, 0.0)), user_phase, None),
    ];
    let mut out = Vec::new();
    for (spectrum, alpha, phase, expected) in cases {
        let r = theorem_residual(&spectrum, alpha, phase)?;
        let again = theorem_residual(&spectrum, alpha, phase)?;
        let finite = r.log_lhs.is_finite() && r.log_rhs.is_finite() && r.log_gap.is_finite();
        let matches = expected.is_none_or(|g| (r.log_gap - g).abs() < 1e-9);
        let details = json!({
            "kind": "residual",
            "spectrum": spectrum.to_string(),
            "phase": { "n": phase.n, "sign": phase.sign },
            "log_lhs": r.log_lhs,
            "log_rhs": r.log_rhs,
            "log_gap": r.log_gap,
            "phase_gap": r.phase_gap,
            "expected_log_gap": expected,
            "passed": finite && matches && r == again,
        });
        out.push(
            Record::new(input.clone(), alpha, c(r.log_gap, r.phase_gap), 0.0, r.warnings, "theorem", "gamma|hankel-gamma")
                .with_details(details),
        );
    }
    // Phase branches differ by a unit-modulus factor for real α.
    let domain = Domain::hankel();
    for x in [0.25, 0.5, 1.5] {
        let alpha = c(x, 0.0);
        let base = theorem_rhs(&a.spectrum, alpha, principal, NormalizationKind::HankelGamma, &domain)?;
        let turned = theorem_rhs(&a.spectrum, alpha, PhaseBranch::new(1, 1)?, NormalizationKind::HankelGamma, &domain)?;
        let ratio = (turned.log_value - base.log_value).exp();
        let gap = (ratio.norm() - 1.0).abs();
        out.push(
            Record::new(input.clone(), alpha, ratio, gap, Vec::new(), "phase-branch", "hankel-gamma").with_details(json!({
                "kind": "phase-ratio",
                "modulus_gap": gap,
                "passed": gap < 1e-12,
            })),
        );
    }
    Ok(out)
}

fn involution_suite(input: &serde_json::Value, a: &VerifyArgs) -> Result<Vec<Record>> {
    find_zeros(a.t_min, a.t_max, usize::MAX)?
        .into_iter()
        .map(|z| {
            let rec = involution_check(z.alpha(), &a.spectrum, Func::Zeta)?;
            let passed = rec.reflected_point == rec.alpha0
                && rec.value_at.norm() < 1e-5
                && rec.value_at_reflected.norm() < 1e-5
                && rec.chain_residual.iter().all(|r| *r < 1e-12);
            let mut details = serde_json::to_value(&rec).unwrap_or_default();
            details["passed"] = json!(passed);
            Ok(Record::new(input.clone(), rec.alpha0, rec.value_at, 0.0, Vec::new(), "involution", "hankel-gamma")
                .with_details(details))
        })
        .collect()
}

fn hc_suite(input: &serde_json::Value, a: &VerifyArgs) -> Result<Vec<Record>> {
    let mut alphas: Vec<Complex64> = find_zeros(a.t_min, a.t_max, usize::MAX)?.iter().map(|z| z.alpha()).collect();
    alphas.push(c(0.5, 0.0));
    alphas
        .into_iter()
        .map(|alpha| {
            let h = hc_relation_check(alpha, &a.spectrum)?;
            let gap = (h.gamma_factor - 1.0).norm();
            let passed = gap < 1e-10 && h.holds_at_half;
            let mut details = serde_json::to_value(h).unwrap_or_default();
            details["passed"] = json!(passed);
            Ok(Record::new(input.clone(), alpha, h.gamma_factor, gap, Vec::new(), "hc", "hankel-haar").with_details(details))
        })
        .collect()
}
