use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::mellin::{ContourSpec, QuadOptions};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn hankel(alpha: Complex64) -> crate::quad::QuadratureResult {
    zeta_hankel(alpha, &ContourSpec::default(), NearIntegerPolicy::Ring, QuadOptions::default()).unwrap()
}

#[test]
fn domain_strips() {
    assert!(DomainStrip::ZETA_REAL_AXIS.contains(c(1.5, 3.0)));
    assert!(!DomainStrip::ZETA_REAL_AXIS.contains(c(1.0, 3.0)));
    assert!(!DomainStrip::ZETA_CONTOUR.contains(c(1.0 + 1e-12, 0.0)));
    assert!(DomainStrip::ETA_REAL_AXIS.contains(c(1e-3, -4.0)));
}

#[test]
fn real_axis_forms() {
    let o = QuadOptions::default();
    assert!((zeta_mellin_real(c(2.0, 0.0), o).unwrap().value - PI * PI / 6.0).norm() < 1e-12);
    assert!((zeta_mellin_real(c(4.0, 0.0), o).unwrap().value - PI.powi(4) / 90.0).norm() < 1e-12);
    let a = c(1.5, 3.0);
    assert!((zeta_mellin_real(a, o).unwrap().value - zeta_ref(a).unwrap()).norm() < 1e-9);
    assert!(matches!(zeta_mellin_real(c(0.9, 1.0), o), Err(crate::Error::Domain(_))));

    let corrected = eta_mellin_real(c(2.0, 0.0), EtaMode::Corrected, o).unwrap().value;
    assert!((corrected - PI * PI / 12.0).norm() < 1e-12);
    let literal = eta_mellin_real(c(2.0, 0.0), EtaMode::AsWritten, o).unwrap().value;
    assert!((literal - PI * PI / 24.0).norm() < 1e-12);
    let eta1 = eta_mellin_real(c(1.0, 0.0), EtaMode::Corrected, o).unwrap().value;
    assert!((eta1 - LN_2).norm() < 1e-12);
    assert!(matches!(eta_mellin_real(c(0.0, 1.0), EtaMode::Corrected, o), Err(crate::Error::Domain(_))));

    for a in [c(0.3, 5.0), c(2.2, -7.0)] {
        let eta = eta_series(a, 1e-13).unwrap();
        let v = eta_mellin_real(a, EtaMode::Corrected, o).unwrap().value;
        assert!((v - eta).norm() < 1e-9, "{a}");
        let v = eta_mellin_real(a, EtaMode::AsWritten, o).unwrap().value;
        assert!((v - crate::mellin::eta_factor(a) * eta).norm() < 1e-9, "{a}");
    }
}

#[test]
fn contour_examples() {
    assert!((hankel(c(0.5, 0.0)).value + 1.4603545088095868).norm() < 1e-10);
    assert!((hankel(c(-1.0, 0.0)).value + 1.0 / 12.0).norm() < 1e-10);
    assert!((hankel(c(0.0, 0.0)).value + 0.5).norm() < 1e-10);
    assert!(hankel(c(0.5, 14.134725)).value.norm() < 1e-5);
}

#[test]
fn contour_near_integers() {
    let spec = ContourSpec::default();
    let o = QuadOptions::default();
    let two = hankel(c(2.0, 0.0));
    assert!((two.value - PI * PI / 6.0).norm() < 1e-10, "{}", two.value);
    assert!(two.warnings.iter().any(|w| w == WARN_RING));

    let near_one = c(1.0 + 3e-3, 1e-3);
    let v = hankel(near_one);
    assert!((v.value - zeta_ref(near_one).unwrap()).norm() < 1e-8 * v.value.norm());

    assert!(matches!(
        zeta_hankel(c(1.0, 0.0), &spec, NearIntegerPolicy::Ring, o),
        Err(crate::Error::Pole { .. })
    ));
    assert!(matches!(
        zeta_hankel(c(3.005, 0.0), &spec, NearIntegerPolicy::Reject, o),
        Err(crate::Error::NearInteger { .. })
    ));
    let fb = zeta_hankel(c(3.005, 0.0), &spec, NearIntegerPolicy::Fallback, o).unwrap();
    assert!(fb.warnings.iter().any(|w| w == WARN_FALLBACK));

    let eta1 = eta_hankel(c(1.0, 0.0), &spec, NearIntegerPolicy::Ring, o).unwrap();
    assert!((eta1.value - LN_2).norm() < 1e-10);
    let eta2 = eta_hankel(c(2.0, 0.0), &spec, NearIntegerPolicy::Ring, o).unwrap();
    assert!((eta2.value - PI * PI / 12.0).norm() < 1e-10);
}

#[test]
fn contour_matches_reference_in_critical_strip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..12 {
        let a = c(rng.random_range(0.1..0.9), rng.random_range(-30.0..30.0));
        let h = hankel(a).value;
        let r = zeta_ref(a).unwrap();
        assert!((h - r).norm() < 1e-8, "{a}: {h} vs {r}");
        let eta = eta_series(a, 1e-13).unwrap();
        assert!((eta - crate::mellin::eta_factor(a) * r).norm() < 1e-10);
    }
}

#[test]
fn contour_matches_reference_off_strip() {
    for a in [c(-2.5, 20.0), c(-1.7, -29.0), c(4.6, 25.0), c(-2.9, 0.3), c(3.5, -0.5)] {
        let h = hankel(a).value;
        let r = zeta_ref(a).unwrap();
        assert!((h - r).norm() < 1e-8, "{a}: {h} vs {r}");
    }
}

#[test]
fn functional_equation_holds() {
    let spec = ContourSpec::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..6 {
        let a = c(rng.random_range(-2.0..3.0), rng.random_range(0.2..10.0));
        let r = functional_equation_residual(a, &spec).unwrap();
        assert!(r < 1e-8, "{a}: {r}");
    }
}

#[test]
fn zeros_have_conjugate_partners() {
    for z in find_zeros(1.0, 26.0, 10).unwrap() {
        assert!(zeta_ref(c(0.5, -z.t)).unwrap().norm() < 1e-6);
    }
}

#[test]
fn counting_matches_zero_search() {
    for t in [20.0, 30.0, 40.0] {
        let n = count_zeros_rectangle(0.0, 1.0, 1.0, t).unwrap();
        assert_eq!(n as usize, find_zeros(1.0, t, usize::MAX).unwrap().len(), "T = {t}");
    }
}
