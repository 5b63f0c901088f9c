mod common;

use common::{gauss_legendre, piecewise_gl};
use kernreg::prelude::*;

#[test]
fn bump_constant_matches_gauss_legendre() {
    let shape = |u: f64| if u.abs() < 1.0 { (-1.0 / (1.0 - u * u)).exp() } else { 0.0 };
    let b = 1.0 / gauss_legendre(shape, -1.0, 1.0, 400);
    assert!((b - 2.252_283_6).abs() < 1e-6, "b = {b}");
    let k = Kernel::bump();
    assert!((k.pdf(0.0) - b * (-1.0f64).exp()).abs() < 1e-9);
}

fn all_kernels() -> Vec<Kernel> {
    vec![
        Kernel::gaussian(),
        Kernel::rectangular(),
        Kernel::bump(),
        Kernel::exp_power(1.0).unwrap(),
        Kernel::exp_power(2.0).unwrap(),
        Kernel::exp_power(4.5).unwrap(),
        Kernel::gaussian_mixture(-3.0, 3.0, 0.5).unwrap(),
        Kernel::gaussian_mixture(0.0, 1.5, 0.2).unwrap(),
    ]
}

/// Kernel mass below `x` by Gauss-Legendre from a point where the left tail
/// is negligible.
fn oracle_cdf(k: &Kernel, x: f64) -> f64 {
    let s = k.support();
    let lo = if s.lo.is_finite() { s.lo } else { -80.0 };
    if x <= lo {
        return 0.0;
    }
    let hi = if s.hi.is_finite() { x.min(s.hi) } else { x };
    piecewise_gl(|u| k.pdf(u), lo, hi, &[0.0, -0.5, 0.5, -3.0, 3.0], 400)
}

#[test]
fn kernel_cdf_matches_oracle() {
    for k in all_kernels() {
        for i in 0..=60 {
            let x = -6.0 + 0.2 * i as f64;
            let got = k.kernel_cdf(x, 1e-10).unwrap();
            let want = oracle_cdf(&k, x);
            assert!((got - want).abs() < 1e-8, "{} at {x}: {got} vs {want}", k.name());
        }
    }
}

#[test]
fn scaled_kernel_integrates_to_one() {
    for k in all_kernels() {
        for h in [0.05, 1.0, 13.0] {
            let sk = k.scale(h).unwrap();
            let mass = piecewise_gl(|u| sk.pdf(u), -200.0 * h, 200.0 * h, &[0.0, -0.5 * h, 0.5 * h], 2000);
            assert!((mass - 1.0).abs() < 1e-7, "{} h={h}: {mass}", k.name());
        }
    }
}

#[test]
fn quantile_inverts_cdf() {
    for k in all_kernels() {
        for p in [0.01, 0.2, 0.5, 0.77, 0.999] {
            let q = k.quantile(p, 1e-12).unwrap();
            assert!((k.kernel_cdf(q, 1e-12).unwrap() - p).abs() < 1e-8, "{} p={p}", k.name());
        }
    }
}

#[test]
fn log_concavity_classification() {
    for k in all_kernels() {
        // Two unit normals mix log-concavely iff their means are at most 2 apart.
        let expect = !k.name().starts_with("gauss_mix:mu1=-3");
        let report = check_log_concave(&k, 10_000).unwrap();
        assert_eq!(report.passed, expect, "{}", k.name());
        if !report.passed {
            assert!(report.witness_violates(&k));
        }
    }
}
