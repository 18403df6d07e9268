//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Reference values come from oracles defined in this file.

use std::f64::consts::{LN_2, PI};
use std::time::{Duration, Instant};

use hankel_zeta::identity::{
    exp_tr_det_check, exp_tr_det_suite, hc_relation_check, normalization_constant, scalar_det_side,
    theorem_residual, theorem_rhs, MatrixOperand, PhaseBranch,
};
use hankel_zeta::mellin::{mellin, ContourSpec, Domain, Kernel, NormalizationKind, QuadOptions};
use hankel_zeta::spectrum::Spectrum;
use hankel_zeta::zeta::{
    count_zeros_rectangle, eta_hankel, find_zeros, functional_equation_residual, involution_check, reflect,
    zeta_hankel, zeta_mellin_real, zeta_ref, Func, NearIntegerPolicy,
};
use hankel_zeta::Complex64;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

// Euler–Maclaurin ζ with N = 60 and ten Bernoulli corrections.
fn em_zeta(s: Complex64) -> Complex64 {
    const N: usize = 60;
    const B2K: [f64; 10] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
        43867.0 / 798.0,
        -174611.0 / 330.0,
    ];
    let one = c(1.0, 0.0);
    let pow = |n: f64, e: Complex64| (e * n.ln()).exp();
    let n = N as f64;
    let mut sum: Complex64 = (1..N).map(|k| pow(k as f64, -s)).sum();
    sum += pow(n, one - s) / (s - one) + 0.5 * pow(n, -s);
    // rising product s(s+1)…(s+2k−2) and (2k)!
    let mut rising = s;
    let mut fact = 2.0;
    for (k, b) in B2K.iter().enumerate() {
        let k = k + 1;
        sum += *b / fact * rising * pow(n, -s - (2 * k - 1) as f64);
        let m = 2 * k as u32;
        rising *= (s + (m - 1) as f64) * (s + m as f64);
        fact *= ((m + 1) * (m + 2)) as f64;
    }
    sum
}

// Riemann–Siegel θ from its Stirling expansion.
fn theta(t: f64) -> f64 {
    t / 2.0 * (t / (2.0 * PI)).ln() - t / 2.0 - PI / 8.0 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t.powi(3))
        + 31.0 / (80640.0 * t.powi(5))
}

fn hardy(t: f64) -> f64 {
    (c(0.0, theta(t)).exp() * em_zeta(c(0.5, t))).re
}

fn bisection_zeros(lo: f64, hi: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let step = 0.1;
    let mut a = lo;
    let mut za = hardy(a);
    while a < hi {
        let b = (a + step).min(hi);
        let zb = hardy(b);
        if za * zb < 0.0 {
            let (mut l, mut r, mut zl) = (a, b, za);
            for _ in 0..60 {
                let m = 0.5 * (l + r);
                let zm = hardy(m);
                if zl * zm <= 0.0 {
                    r = m;
                } else {
                    l = m;
                    zl = zm;
                }
            }
            out.push(0.5 * (l + r));
        }
        a = b;
        za = zb;
    }
    out
}

fn near_integer(z: Complex64, gap: f64) -> bool {
    (z - c(z.re.round(), 0.0)).norm() <= gap
}

fn strip_points(rng: &mut ChaCha8Rng, count: usize, re: (f64, f64), im: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let z = c(rng.random_range(re.0..re.1), rng.random_range(-im..=im));
        if !near_integer(z, 0.02) {
            out.push(z);
        }
    }
    out
}

/// Points shared by the representation and scalar-substitution criteria.
fn grid() -> (Vec<Complex64>, Vec<Complex64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let real_axis = strip_points(&mut rng, 20, (1.1, 4.0), 8.0);
    let wide = strip_points(&mut rng, 50, (-2.0, 4.0), 30.0);
    (real_axis, wide)
}

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

fn ok(r: hankel_zeta::Result<Verdict>) -> Verdict {
    r.unwrap_or_else(|e| verdict(false, format!("{}: {e}", e.kind())))
}

fn normalization() -> hankel_zeta::Result<Verdict> {
    let spec = ContourSpec::default();
    let mut worst: f64 = 0.0;
    for x in [0.1, 0.25, 0.5, 0.75, 1.5, 2.48, 2.52] {
        worst = worst.max((normalization_constant(c(x, 0.0), &spec)?.value - 1.0).norm());
    }
    Ok(verdict(worst < 1e-9, format!("max |N-1| = {worst:.2e}")))
}

fn representations() -> hankel_zeta::Result<Verdict> {
    let spec = ContourSpec::default();
    let opts = QuadOptions::default();
    let (real_axis, wide) = grid();
    let mut worst_real: f64 = 0.0;
    for &a in &real_axis {
        let h = zeta_hankel(a, &spec, NearIntegerPolicy::Ring, opts)?.value;
        worst_real = worst_real.max((h - zeta_mellin_real(a, opts)?.value).norm());
    }
    let mut worst_ref: f64 = 0.0;
    let mut worst_em: f64 = 0.0;
    for &a in &wide {
        let h = zeta_hankel(a, &spec, NearIntegerPolicy::Ring, opts)?.value;
        worst_ref = worst_ref.max((h - zeta_ref(a)?).norm());
        worst_em = worst_em.max((h - em_zeta(a)).norm());
    }
    Ok(verdict(
        worst_real < 1e-8 && worst_ref < 1e-8 && worst_em < 1e-8,
        format!("contour vs real axis {worst_real:.2e}, vs series {worst_ref:.2e}, vs Euler-Maclaurin {worst_em:.2e}"),
    ))
}

fn spot_values() -> hankel_zeta::Result<Verdict> {
    let spec = ContourSpec::default();
    let opts = QuadOptions::default();
    let policy = NearIntegerPolicy::Ring;
    let zeta = |x: f64| zeta_hankel(c(x, 0.0), &spec, policy, opts).map(|q| q.value);
    let eta = |x: f64| eta_hankel(c(x, 0.0), &spec, policy, opts).map(|q| q.value);
    // Euler–Maclaurin values double as a check on the closed forms.
    let cases = [
        ("zeta(0)", zeta(0.0)?, -0.5, em_zeta(c(0.0, 0.0)).re),
        ("zeta(-1)", zeta(-1.0)?, -1.0 / 12.0, em_zeta(c(-1.0, 0.0)).re),
        ("zeta(2)", zeta(2.0)?, PI * PI / 6.0, em_zeta(c(2.0, 0.0)).re),
        ("eta(1)", eta(1.0)?, LN_2, LN_2),
        ("eta(2)", eta(2.0)?, PI * PI / 12.0, em_zeta(c(2.0, 0.0)).re / 2.0),
    ];
    let mut worst: f64 = 0.0;
    let mut label = "";
    for (name, got, closed, oracle) in cases {
        let e = (got - closed).norm().max((closed - oracle).abs());
        if e >= worst {
            worst = e;
            label = name;
        }
    }
    Ok(verdict(worst < 1e-8, format!("max error {worst:.2e} at {label}")))
}

fn zeros_and_involution() -> hankel_zeta::Result<Verdict> {
    let zeros = find_zeros(1.0, 50.0, usize::MAX)?;
    let oracle = bisection_zeros(1.0, 50.0);
    let mut problems = Vec::new();
    if zeros.len() != 10 || oracle.len() != 10 {
        problems.push(format!("found {} zeros, oracle {}", zeros.len(), oracle.len()));
    }
    let worst_residual = zeros.iter().map(|z| z.residual).fold(0.0, f64::max);
    if worst_residual >= 1e-6 {
        problems.push(format!("residual {worst_residual:.2e}"));
    }
    let worst_t = zeros.iter().zip(&oracle).map(|(z, t)| (z.t - t).abs()).fold(0.0, f64::max);
    if worst_t >= 1e-6 {
        problems.push(format!("ordinate error {worst_t:.2e}"));
    }
    let inside = count_zeros_rectangle(0.0, 1.0, 1.0, 50.0)?;
    let outside = count_zeros_rectangle(2.0, 3.0, 0.0, 50.0)?;
    if inside != 10 || outside != 0 {
        problems.push(format!("counts {inside} and {outside}"));
    }
    let one = Spectrum::explicit(vec![1.0])?;
    let mut worst_zeta: f64 = 0.0;
    for z in &zeros {
        let rec = involution_check(z.alpha(), &one, Func::Zeta)?;
        if reflect(z.alpha()) != z.alpha() || rec.reflected_point != rec.alpha0 {
            problems.push(format!("reflection moved {}", z.alpha()));
        }
        worst_zeta = worst_zeta.max(rec.value_at_reflected.norm());
    }
    if worst_zeta >= 1e-5 {
        problems.push(format!("|zeta| at reflected zero {worst_zeta:.2e}"));
    }
    let summary = format!(
        "{} zeros, residual {worst_residual:.2e}, ordinate error {worst_t:.2e}, counts {inside}/{outside}, |zeta| {worst_zeta:.2e}",
        zeros.len()
    );
    Ok(if problems.is_empty() {
        verdict(true, summary)
    } else {
        verdict(false, problems.join("; "))
    })
}

fn functional_equation() -> hankel_zeta::Result<Verdict> {
    let spec = ContourSpec::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut points = Vec::new();
    while points.len() < 20 {
        let z = c(rng.random_range(-2.0..3.0), rng.random_range(-30.0..=30.0));
        // ζ(α) and ζ(1 − α) both stay off the pole and the Γ(1 − α) poles.
        if !near_integer(z, 0.02) {
            points.push(z);
        }
    }
    let mut worst: f64 = 0.0;
    for a in points {
        worst = worst.max(functional_equation_residual(a, &spec)?);
    }
    Ok(verdict(worst < 1e-8, format!("max residual {worst:.2e}")))
}

fn exp_trace_det() -> hankel_zeta::Result<Verdict> {
    let suite = exp_tr_det_suite(17, 200, 8)?;
    let random = suite.iter().map(|s| s.rel_residual).fold(0.0, f64::max);
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut exact: f64 = 0.0;
    for d in 1..=8 {
        let n = DMatrix::from_fn(d, d, |i, j| {
            if j > i {
                c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))
            } else {
                c(0.0, 0.0)
            }
        });
        let r = exp_tr_det_check(&MatrixOperand::new(n, false)?)?;
        exact = exact.max((r.lhs - 1.0).norm()).max((r.rhs - 1.0).norm());
        let diag: Vec<Complex64> = (0..d).map(|_| c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))).collect();
        exact = exact.max(exp_tr_det_check(&MatrixOperand::from_diagonal(&diag)?)?.rel_residual);
    }
    Ok(verdict(
        suite.len() == 200 && random < 1e-9 && exact < 1e-12,
        format!("{} random, max residual {random:.2e}; nilpotent/diagonal {exact:.2e}", suite.len()),
    ))
}

fn scalar_substitution() -> hankel_zeta::Result<Verdict> {
    let (real_axis, wide) = grid();
    let mut worst: f64 = 0.0;
    for cc in [0.5, 1.0, 2.0] {
        for &a in real_axis.iter().chain(&wide) {
            let got = scalar_det_side(cc, a)?.value;
            let expected = (cc * a).exp();
            worst = worst.max((got - expected).norm() / (cc * a.re).exp());
        }
    }
    Ok(verdict(worst < 1e-8, format!("max scaled error {worst:.2e}")))
}

fn phase_structure() -> hankel_zeta::Result<Verdict> {
    let domain = Domain::hankel();
    let principal = PhaseBranch::principal();
    let mut ratio_gap: f64 = 0.0;
    for spectrum in [Spectrum::explicit(vec![1.0])?, Spectrum::explicit(vec![1.0, 2.0, 3.5])?] {
        for sign in [1, -1] {
            let turned = PhaseBranch::new(1, sign)?;
            for x in [0.25, 0.5, 0.8, 1.5, 2.3] {
                let a = c(x, 0.0);
                let base = theorem_rhs(&spectrum, a, principal, NormalizationKind::HankelGamma, &domain)?;
                let other = theorem_rhs(&spectrum, a, turned, NormalizationKind::HankelGamma, &domain)?;
                ratio_gap = ratio_gap.max(((other.log_value - base.log_value).exp().norm() - 1.0).abs());
            }
        }
    }
    let spectrum = Spectrum::explicit(vec![1.0])?;
    let mut line: Vec<Complex64> = find_zeros(1.0, 50.0, usize::MAX)?.iter().map(|z| z.alpha()).collect();
    let zero_count = line.len();
    line.extend([c(0.5, 0.0), c(0.5, 3.7), c(0.5, -12.0)]);
    let mut gamma_gap: f64 = 0.0;
    let mut all_hold = true;
    for (k, a) in line.iter().enumerate() {
        let h = hc_relation_check(*a, &spectrum)?;
        gamma_gap = gamma_gap.max((h.gamma_factor - 1.0).norm());
        if k < zero_count {
            all_hold &= h.holds_at_half;
        }
    }
    Ok(verdict(
        ratio_gap < 1e-12 && gamma_gap < 1e-10 && all_hold && zero_count == 10,
        format!("|ratio|-1 {ratio_gap:.2e}, gamma factor {gamma_gap:.2e}, holds at {zero_count} zeros: {all_hold}"),
    ))
}

fn theorem_ledger() -> hankel_zeta::Result<Verdict> {
    let p = PhaseBranch::principal();
    let cases = [(vec![1.0], 1.0, -2.0), (vec![1.0, 2.0], 2.0, -7.25)];
    let mut worst: f64 = 0.0;
    let mut stable = true;
    for (values, x, expected) in cases {
        let s = Spectrum::explicit(values)?;
        let r = theorem_residual(&s, c(x, 0.0), p)?;
        let again = theorem_residual(&s, c(x, 0.0), p)?;
        stable &= r == again && r.log_lhs.is_finite() && r.log_rhs.is_finite() && r.phase_gap.is_finite();
        worst = worst.max((r.log_gap - expected).abs());
    }
    Ok(verdict(
        worst < 1e-9 && stable,
        format!("log gap error {worst:.2e}, deterministic and finite: {stable}"),
    ))
}

fn quadrature_honesty() -> hankel_zeta::Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let opts = QuadOptions {
        doubling_check: true,
        ..QuadOptions::default()
    };
    let mut exceed = 0;
    let mut errors = 0;
    for k in 0..100 {
        let kernel = match k % 4 {
            0 => Kernel::Bose,
            1 => Kernel::Fermi,
            2 => Kernel::Exp,
            _ => Kernel::ScaledExp(rng.random_range(0.2..3.0)),
        };
        let real_axis = k % 3 == 0;
        let (re, im) = if real_axis { ((1.1, 4.0), 8.0) } else { ((-2.0, 4.0), 30.0) };
        let a = strip_points(&mut rng, 1, re, im)[0];
        let (norm, domain) = if real_axis {
            (NormalizationKind::Gamma, Domain::real_axis())
        } else {
            (NormalizationKind::HankelGamma, Domain::hankel())
        };
        match mellin(&kernel, a, norm, &domain, opts) {
            Ok(q) => {
                if q.doubling_delta.is_none_or(|d| d > q.err_estimate) {
                    exceed += 1;
                }
            }
            Err(_) => errors += 1,
        }
    }
    Ok(verdict(
        exceed + errors <= 5,
        format!("delta above estimate in {exceed} of 100, {errors} errors"),
    ))
}

type Criterion = (&'static str, fn() -> hankel_zeta::Result<Verdict>, Duration);

fn main() {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        ("normalization constant", normalization, secs(10)),
        ("representation equivalence", representations, secs(120)),
        ("continuation spot values", spot_values, secs(600)),
        ("zeros and involution", zeros_and_involution, secs(300)),
        ("functional equation", functional_equation, secs(600)),
        ("exp-trace/det identity", exp_trace_det, secs(30)),
        ("scalar determinant substitution", scalar_substitution, secs(600)),
        ("phase structure", phase_structure, secs(600)),
        ("theorem residual ledger", theorem_ledger, secs(600)),
        ("quadrature honesty", quadrature_honesty, secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut v = ok(check());
        let took = start.elapsed();
        if took > *limit {
            v.passed = false;
            v.detail.push_str(&format!("; exceeded {limit:?}"));
        }
        failed += usize::from(!v.passed);
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2} {name}: {} ({:.1}s)", i + 1, v.detail, took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
