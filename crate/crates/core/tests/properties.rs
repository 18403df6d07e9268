use std::f64::consts::PI;

use hankel_zeta::cli::{format_complex, parse_complex};
use hankel_zeta::identity::{
    exp_tr_det_auto, random_matrix, scalar_det_side, spectral_zeta, MatrixFamily, PhaseBranch,
};
use hankel_zeta::mellin::{mellin, ContourSpec, Domain, Kernel, NormalizationKind, QuadOptions};
use hankel_zeta::special::{cpow, gamma, log_gamma, sin_pi};
use hankel_zeta::spectrum::Spectrum;
use hankel_zeta::zeta::{chain_residual, reflect, zeta_hankel, NearIntegerPolicy};
use hankel_zeta::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn off_integer(z: Complex64) -> bool {
    (z - z.re.round()).norm() > 0.05
}

fn zeta(alpha: Complex64, spec: &ContourSpec) -> Complex64 {
    zeta_hankel(alpha, spec, NearIntegerPolicy::Ring, QuadOptions::default())
        .unwrap()
        .value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_reflection(re in -4.0..5.0f64, im in -6.0..6.0f64) {
        let z = c(re, im);
        prop_assume!(off_integer(z));
        let lhs = gamma(z).unwrap() * gamma(1.0 - z).unwrap();
        let rhs = PI / sin_pi(z);
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn log_gamma_exponentiates_to_gamma(re in 0.1..8.0f64, im in -10.0..10.0f64) {
        let z = c(re, im);
        let g = gamma(z).unwrap();
        let via_log = log_gamma(z).unwrap().exp();
        prop_assert!((g - via_log).norm() <= 1e-11 * g.norm());
    }

    #[test]
    fn cpow_sheet_law(re in -3.0..3.0f64, im in -3.0..3.0f64, a_re in -2.0..2.0f64, a_im in -2.0..2.0f64, k in -2i32..=2) {
        let g = c(re, im);
        prop_assume!(g.norm() > 1e-3);
        let alpha = c(a_re, a_im);
        let base = cpow(g, alpha, g.arg()).unwrap();
        let turned = cpow(g, alpha, g.arg() + 2.0 * PI * k as f64).unwrap();
        let factor = (c(0.0, 2.0 * PI * k as f64) * alpha).exp();
        prop_assert!((turned - base * factor).norm() <= 1e-12 * turned.norm().max(1.0));
        prop_assert!(cpow(g, alpha, g.arg() + 1.0).is_err());
    }

    #[test]
    fn complex_literal_round_trip(re in proptest::num::f64::NORMAL | proptest::num::f64::ZERO, im in proptest::num::f64::NORMAL | proptest::num::f64::ZERO) {
        let z = c(re, im);
        let back = parse_complex(&format_complex(z)).unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn involution_chain_algebra(re in -3.0..3.0f64, im in -40.0..40.0f64, log_det in -5.0..5.0f64, n in 0u32..4) {
        let a = c(re, im);
        prop_assert!((reflect(reflect(a)) - a).norm() <= 4.0 * f64::EPSILON);
        prop_assert_eq!(reflect(c(0.5, im)), c(0.5, im));
        prop_assert!(chain_residual(0.5, log_det, n) < 1e-12);
        let r = chain_residual(re, log_det, 0);
        let mirrored = chain_residual(1.0 - re, -log_det, 0);
        prop_assert!((r - mirrored).abs() <= 1e-12 * r.max(1.0));
    }

    #[test]
    fn phase_single_valued_at_integers(k in -6i32..=6, n in 0u32..5, plus in any::<bool>()) {
        let sign = if plus { 1 } else { -1 };
        let p = PhaseBranch::new(n, sign).unwrap();
        let factor = (c(0.0, 1.0) * p.phase(c(k as f64, 0.0))).exp();
        prop_assert!((factor - 1.0).norm() < 1e-12);
    }

    #[test]
    fn phase_unimodular_on_real_axis(x in -5.0..5.0f64, n in 0u32..5) {
        let p = PhaseBranch::new(n, 1).unwrap();
        let factor = (c(0.0, 1.0) * p.phase(c(x, 0.0))).exp();
        prop_assert!((factor.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exp_trace_det_families(d in 1usize..9, seed in any::<u64>(), which in 0usize..3) {
        let family = [MatrixFamily::Hermitian, MatrixFamily::Triangular, MatrixFamily::General][which];
        let m = random_matrix(family, d, seed).unwrap();
        prop_assert!(exp_tr_det_auto(&m).unwrap().rel_residual < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn zeta_conjugate_symmetry(re in -2.0..4.0f64, im in 0.1..25.0f64) {
        let a = c(re, im);
        prop_assume!(off_integer(a));
        let spec = ContourSpec::default();
        let up = zeta(a, &spec);
        let down = zeta(a.conj(), &spec);
        prop_assert!((up - down.conj()).norm() <= 1e-10 * up.norm().max(1.0));
    }

    #[test]
    fn contour_deformation_invariance(re in -1.5..3.5f64, im in -3.0..3.0f64, radius in 0.4..3.0f64, psi in 0.0..0.6f64) {
        let a = c(re, im);
        prop_assume!(off_integer(a));
        let base = zeta(a, &ContourSpec::default());
        let spec = ContourSpec { inner_radius: radius, ..ContourSpec::default() }.with_ray_angle(psi);
        let moved = zeta(a, &spec);
        prop_assert!((base - moved).norm() <= 1e-9 * base.norm().max(1.0), "{base} vs {moved}");
    }

    #[test]
    fn mellin_dirichlet_consistency(
        values in proptest::collection::vec(0.5..5.0f64, 1..5),
        re in 0.3..3.0f64,
        im in -5.0..5.0f64,
    ) {
        let spectrum = Spectrum::explicit(values).unwrap();
        let a = c(re, im);
        let transform = mellin(&Kernel::Trace(spectrum.clone()), a, NormalizationKind::Gamma, &Domain::real_axis(), QuadOptions::default()).unwrap();
        let direct = spectral_zeta(&spectrum, a).value;
        prop_assert!((transform.value - direct).norm() <= 1e-9 * direct.norm().max(1.0));
    }

    #[test]
    fn scalar_substitution(cc in 0.1..3.0f64, re in -2.0..4.0f64, im in -20.0..20.0f64) {
        let a = c(re, im);
        prop_assume!(off_integer(a));
        let got = scalar_det_side(cc, a).unwrap().value;
        let expected = (cc * a).exp();
        prop_assert!((got - expected).norm() <= 1e-8 * (cc * re).exp());
    }
}
