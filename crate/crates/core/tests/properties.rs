use std::f64::consts::{E, PI};

use num_complex::Complex64;
use olct::measures::{beurling_log_functional, density_of, l2_norm, mean_variance, shannon_entropy};
use olct::signals::UNIT_GAUSSIAN_ALPHA;
use olct::transform::{induced_grid, spectrum, transform_b0};
use olct::up::{verify_beurling, verify_entropic, verify_hardy, verify_logarithmic, verify_pitt, Verifier};
use olct::{
    default_grid, generate, inverse_transform, transform_direct, transform_fast, Grid, OlctParams,
    SampledSignal, SignalKind, SignalSpec,
};
use proptest::prelude::*;

fn gaussian_on(grid: Grid) -> SampledSignal {
    generate(&SignalSpec::new(SignalKind::unit_gaussian(), grid)).unwrap()
}

fn noise_on(grid: Grid, seed: u64) -> SampledSignal {
    generate(&SignalSpec::new(SignalKind::noise(seed), grid)).unwrap()
}

fn max_abs(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Valid parameters from `(a, b, c)`, solving `d = (1 + bc)/a`.
fn params_strategy() -> impl Strategy<Value = OlctParams> {
    (0.3f64..2.0, 0.4f64..2.5, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, any::<bool>()).prop_map(
        |(a, b, c, tau, eta, neg)| {
            let a = if neg { -a } else { a };
            OlctParams::new(a, b, c, (1.0 + b * c) / a, tau, eta).unwrap()
        },
    )
}

#[test]
fn fourier_case_is_phase_times_plain_fft() {
    // Plain centered DFT evaluated as a sum, then e^{-jπ/4}.
    let grid = Grid::window(256, 10.0).unwrap();
    let f = noise_on(grid, 11);
    let p = OlctParams::fourier();
    let out = transform_fast(&f, &p).unwrap();
    let phase = Complex64::from_polar(1.0, -PI / 4.0);
    let expected: Vec<Complex64> = out
        .grid()
        .coords()
        .map(|u| {
            let s: Complex64 = grid
                .coords()
                .zip(f.values())
                .map(|(t, z)| z * Complex64::from_polar(1.0, -t * u))
                .sum();
            phase * s * grid.step / (2.0 * PI).sqrt()
        })
        .collect();
    assert!(max_abs(out.values(), &expected) < 1e-12);
}

#[test]
fn fourier_inverse_is_inverse_fourier() {
    // The adjoint sum with Fourier parameters is e^{jπ/4} times the inverse DFT.
    let grid = Grid::window(128, 8.0).unwrap();
    let f = noise_on(grid, 2);
    let p = OlctParams::fourier();
    let spec = transform_fast(&f, &p).unwrap();
    let back = inverse_transform(&spec, &p, &grid).unwrap();
    let phase = Complex64::from_polar(1.0, PI / 4.0);
    let du = spec.grid().step;
    let expected: Vec<Complex64> = grid
        .coords()
        .map(|t| {
            let s: Complex64 = spec
                .grid()
                .coords()
                .zip(spec.values())
                .map(|(u, z)| z * Complex64::from_polar(1.0, t * u))
                .sum();
            phase * s * du / (2.0 * PI).sqrt()
        })
        .collect();
    assert!(max_abs(back.values(), &expected) < 1e-12);
    assert!(max_abs(back.values(), f.values()) < 1e-12);
}

#[test]
fn gaussian_round_trip_default_grid() {
    let f = gaussian_on(default_grid());
    let p = OlctParams::new(0.8, 1.0, -0.6, 0.5, 1.0, 0.5).unwrap();
    let back = inverse_transform(&transform_fast(&f, &p).unwrap(), &p, f.grid()).unwrap();
    let err = back.axpy(Complex64::new(-1.0, 0.0), &f).unwrap();
    assert!(l2_norm(&err) / l2_norm(&f) <= 1e-6);
}

#[test]
fn spectrum_oversampling_refines_spacing_and_keeps_energy() {
    let f = gaussian_on(default_grid());
    let p = OlctParams::new(0.5, 0.5, 0.4, 2.4, 0.3, -0.2).unwrap();
    let coarse = transform_fast(&f, &p).unwrap();
    let fine = spectrum(&f, &p, 8).unwrap();
    assert_eq!(fine.len(), 8 * coarse.len());
    assert!((fine.grid().step * 8.0 - coarse.grid().step).abs() < 1e-12);
    assert!((l2_norm(&fine) - 1.0).abs() < 1e-10);
}

#[test]
fn logarithmic_b_scaling_adds_one() {
    let f = gaussian_on(default_grid());
    let c1 = verify_logarithmic(&f, &OlctParams::fourier()).unwrap();
    let pe = OlctParams::new(0.0, E, -1.0 / E, 0.0, 0.0, 0.0).unwrap();
    let ce = verify_logarithmic(&f, &pe).unwrap();
    assert!((ce.rhs - c1.rhs - 1.0).abs() < 1e-12);
}

#[test]
fn logarithmic_extremal_matches_unchirped_gaussian() {
    let p = OlctParams::new(0.8, 1.0, -0.6, 0.5, 1.0, 0.5).unwrap();
    let ext = generate(&SignalSpec::new(
        SignalKind::ChirpedGaussianExtremal { params: p, alpha: UNIT_GAUSSIAN_ALPHA },
        default_grid(),
    ))
    .unwrap();
    let a = verify_logarithmic(&ext, &p).unwrap();
    let b = verify_logarithmic(&gaussian_on(default_grid()), &OlctParams::fourier()).unwrap();
    assert!((a.lhs - b.lhs).abs() < 1e-3, "{} vs {}", a.lhs, b.lhs);
}

#[test]
fn entropic_extremal_b2_and_rect() {
    let p = OlctParams::new(1.0, 2.0, 0.0, 1.0, -0.5, 0.7).unwrap();
    let ext = generate(&SignalSpec::new(
        SignalKind::ChirpedGaussianExtremal { params: p, alpha: UNIT_GAUSSIAN_ALPHA },
        default_grid(),
    ))
    .unwrap();
    let c = verify_entropic(&ext, &p).unwrap();
    assert!((c.lhs - (2.0 * PI * E).ln()).abs() < 1e-3);

    let rect = generate(&SignalSpec::new(SignalKind::Rect { width: 1.0 }, default_grid())).unwrap();
    let c = verify_entropic(&rect, &OlctParams::fourier()).unwrap();
    assert!(c.margin > 0.0 && c.pass);
}

#[test]
fn pitt_gaussian_fourier_lambda_grid() {
    let f = gaussian_on(default_grid());
    for i in 1..10 {
        let c = verify_pitt(&f, &OlctParams::fourier(), i as f64 / 10.0).unwrap();
        assert!(c.pass, "{c:?}");
    }
}

#[test]
fn hardy_rect_spectrum_envelope_diverges() {
    let rect = generate(&SignalSpec::new(SignalKind::Rect { width: 1.0 }, default_grid())).unwrap();
    let c = verify_hardy(&rect, &OlctParams::fourier(), UNIT_GAUSSIAN_ALPHA).unwrap();
    let threshold = c.meta_num("divergence_log_threshold").unwrap();
    assert!(c.meta_num("time_envelope_log").unwrap() < threshold);
    assert!(c.meta_num("freq_envelope_log").unwrap() > threshold);
    assert!(c.pass);
}

#[test]
fn beurling_gaussian_growth_matches_closed_form() {
    // For the Fourier pair |f(t)||F(u)|e^{|tu|} = π^{-1/2} e^{-(|t|-|u|)²/2}, so
    // value(W) = 8 π^{-1/2} [W sqrt(π/2) erf(W/√2) - (1 - e^{-W²/2})].
    let closed = |w: f64| {
        let erf = |x: f64| 1.0 - erfc_approx(x);
        8.0 / PI.sqrt() * (w * (PI / 2.0).sqrt() * erf(w / 2f64.sqrt()) - (1.0 - (-w * w / 2.0).exp()))
    };
    let c = verify_beurling(&gaussian_on(default_grid()), &OlctParams::fourier(), &[4.0, 8.0]).unwrap();
    let logs = c.meta_list("log_values").unwrap();
    let ratio = (logs[1] - logs[0]).exp();
    let expected = closed(8.0) / closed(4.0);
    assert!((expected - 2.249_2).abs() < 1e-3);
    assert!((ratio / expected - 1.0).abs() < 5e-3, "{ratio} vs {expected}");
    assert!(c.pass);
}

/// Abramowitz-Stegun 7.1.26, absolute error below 1.5e-7 for `x >= 0`.
fn erfc_approx(x: f64) -> f64 {
    let t = 1.0 / (1.0 + 0.327_591_1 * x);
    let poly = t * (0.254_829_592
        + t * (-0.284_496_736 + t * (1.421_413_741 + t * (-1.453_152_027 + t * 1.061_405_429))));
    poly * (-x * x).exp()
}

#[test]
fn beurling_functional_is_zero_for_zero_signal() {
    let z = SampledSignal::zeros(default_grid());
    let p = OlctParams::fourier();
    let spec = spectrum(&z, &p, 8).unwrap();
    assert_eq!(beurling_log_functional(&z, &spec, 1.0, 4.0).unwrap(), f64::NEG_INFINITY);
}

#[test]
fn max_entropy_bound_on_dilated_gaussians() {
    for sigma in [0.5, 1.0, 2.0] {
        let f = generate(&SignalSpec::new(SignalKind::Gaussian { sigma }, default_grid())).unwrap();
        let rho = density_of(&f).unwrap();
        let (_, var) = mean_variance(&rho);
        let gap = 0.5 * (2.0 * PI * E * var).ln() - shannon_entropy(&rho);
        assert!(gap.abs() < 1e-4, "sigma {sigma}: gap {gap}");
    }
}

#[test]
fn b0_branch_preserves_energy_for_unit_d() {
    let f = gaussian_on(default_grid());
    let p = OlctParams::new(1.0, 0.0, 0.7, 1.0, 0.5, -0.3).unwrap();
    let out = transform_b0(&f, &p).unwrap();
    assert!((l2_norm(&out) - 1.0).abs() < 1e-3);
}

#[test]
fn battery_suite_passes_for_every_parameter_set() {
    let sets = [
        (0.0, 1.0, -1.0, 0.0, 0.0, 0.0),
        (0.5, 0.5, 0.4, 2.4, 0.3, -0.2),
        (1.0, 2.0, 0.0, 1.0, -0.5, 0.7),
        (0.8, 1.0, -0.6, 0.5, 1.0, 0.5),
        (-0.6, 2.0, -0.95, 1.5, 0.2, -1.0),
    ];
    for (a, b, c, d, tau, eta) in sets {
        let p = OlctParams::new(a, b, c, d, tau, eta).unwrap();
        for spec in olct::battery(&p, default_grid()) {
            let f = generate(&spec).unwrap();
            let config = olct::SuiteConfig { schwartz: spec.kind.is_schwartz(), ..Default::default() };
            let out = olct::run_suite(&f, &p, &config);
            assert!(out.errors.is_empty(), "{}: {:?}", spec.kind.label(), out.errors);
            assert_eq!(out.certificates.len(), 7);
            assert!(out.pass(), "{} at {:?}: {:?}", spec.kind.label(), p.as_array(), out.certificates);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fast_equals_direct(p in params_strategy(), seed in 0u64..1000) {
        let f = noise_on(Grid::window(128, 8.0).unwrap(), seed);
        let fast = transform_fast(&f, &p).unwrap();
        let direct = transform_direct(&f, &p, &induced_grid(f.grid(), &p).unwrap()).unwrap();
        let scale = direct.values().iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!(max_abs(fast.values(), direct.values()) <= 1e-9 * scale);
    }

    #[test]
    fn parseval_and_round_trip(p in params_strategy(), seed in 0u64..1000) {
        let f = noise_on(Grid::window(256, 10.0).unwrap(), seed);
        let out = transform_fast(&f, &p).unwrap();
        prop_assert!((l2_norm(&out) / l2_norm(&f) - 1.0).abs() <= 1e-8);
        let back = inverse_transform(&out, &p, f.grid()).unwrap();
        let err = back.axpy(Complex64::new(-1.0, 0.0), &f).unwrap();
        prop_assert!(l2_norm(&err) <= 1e-6 * l2_norm(&f));
    }

    #[test]
    fn linearity(p in params_strategy(), s1 in 0u64..100, s2 in 0u64..100, re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let grid = Grid::window(128, 8.0).unwrap();
        let (f, g) = (noise_on(grid, s1), noise_on(grid, s2));
        let alpha = Complex64::new(re, im);
        let lhs = transform_fast(&f.axpy(alpha, &g).unwrap(), &p).unwrap();
        let rhs = transform_fast(&f, &p).unwrap().axpy(alpha, &transform_fast(&g, &p).unwrap()).unwrap();
        prop_assert!(max_abs(lhs.values(), rhs.values()) < 1e-12);
    }

    #[test]
    fn uncertainty_bounds_hold_on_random_params(p in params_strategy(), seed in 0u64..1000) {
        let f = noise_on(default_grid(), seed);
        let v = Verifier::new(&f, &p).unwrap();
        prop_assert!(v.heisenberg().unwrap().pass);
        prop_assert!(v.entropic().unwrap().pass);
        prop_assert!(v.logarithmic().unwrap().pass);
        prop_assert!(v.pitt(0.5).unwrap().pass);
    }
}

#[test]
fn b_covariance_of_right_hand_sides() {
    let f = gaussian_on(default_grid());
    let p = OlctParams::new(0.8, 1.0, -0.6, 0.5, 1.0, 0.5).unwrap();
    let base = Verifier::new(&f, &p).unwrap();
    for s in [0.5, 2.0, E] {
        let q = p.rescale_b(s).unwrap();
        let v = Verifier::new(&f, &q).unwrap();
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-14 * y.abs().max(1.0);
        assert!(close(v.heisenberg().unwrap().rhs, s * s * base.heisenberg().unwrap().rhs));
        assert!(close(v.entropic().unwrap().rhs, base.entropic().unwrap().rhs + s.ln()));
        assert!(close(v.logarithmic().unwrap().rhs, base.logarithmic().unwrap().rhs + s.ln()));
    }
}

#[test]
fn chirp_invariance_with_compensating_params() {
    // f e^{jθt²} under a' = a - 2bθ feeds the same chirped input to the
    // Fourier stage, so both moduli and every lhs are unchanged.
    let f = noise_on(default_grid(), 9);
    let p = OlctParams::new(0.5, 0.5, 0.4, 2.4, 0.3, -0.2).unwrap();
    let theta = 0.37;
    let a2 = p.a - 2.0 * p.b * theta;
    let q = OlctParams::new(a2, p.b, (a2 * p.d - 1.0) / p.b, p.d, p.tau, p.eta).unwrap();
    let g = f.modulated(|t| Complex64::from_polar(1.0, theta * t * t));
    let (vf, vg) = (Verifier::new(&f, &p).unwrap(), Verifier::new(&g, &q).unwrap());
    let close = |x: f64, y: f64| (x - y).abs() <= 1e-12 * y.abs().max(1.0);
    assert!(close(vg.heisenberg().unwrap().lhs, vf.heisenberg().unwrap().lhs));
    assert!(close(vg.entropic().unwrap().lhs, vf.entropic().unwrap().lhs));
    assert!(close(vg.logarithmic().unwrap().lhs, vf.logarithmic().unwrap().lhs));

    // Time-only terms depend on |f| alone.
    let (tf, tg) = (vf.entropic().unwrap(), vg.entropic().unwrap());
    assert!(close(tg.meta_num("entropy_time").unwrap(), tf.meta_num("entropy_time").unwrap()));
}
