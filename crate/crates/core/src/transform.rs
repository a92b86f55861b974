//! Offset linear canonical transform engines.
//!
//! For `b > 0` the transform is the integral
//!
//! ```text
//! O_A f(u) = ∫ f(t) K_A(t, u) dt
//! K_A(t, u) = (j 2π b)^{-1/2} exp{ j [ a t²/(2b) − t(u − τ)/b − u(dτ − bη)/b + d(u² + τ²)/(2b) ] }
//! ```
//!
//! and for `b = 0` it degenerates to a chirp multiplication
//! `sqrt(d) exp{j cd (u − τ)²/2 + j u η} f(d(u − τ))`.
//!
//! Two engines are provided for `b > 0`. [`transform_direct`] is the plain
//! midpoint-rule sum against the kernel on an arbitrary output grid, O(N·M).
//! [`transform_fast`] factors the kernel into an input chirp, one FFT and an
//! output phase:
//!
//! ```text
//! g(t)   = f(t) exp{j a t²/(2b) + j t τ/b}
//! G(u)   = (2π)^{-1/2} ∫ g(t) exp{−j t u / b} dt
//! O_A f  = (j b)^{-1/2} exp{−j u(dτ − bη)/b + j d(u² + τ²)/(2b)} G(u)
//! ```
//!
//! The FFT fixes the output lattice to `u_k = τ + (2πb / (N·step))·k` with
//! half-integer `k` symmetric about 0, so `u = τ` itself is never sampled.
//! On that lattice the discrete map is exactly unitary, and the direct sum
//! evaluated on the same lattice is the oracle for the fast one.

use std::cell::RefCell;
use std::f64::consts::{FRAC_PI_4, PI, TAU};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::grid::{Grid, SampledSignal};
use crate::params::OlctParams;

/// Which engine serves a `b > 0` transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Fast,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Method::Direct),
            "fast" => Ok(Method::Fast),
            other => Err(Error::BadConfig(format!("unknown method `{other}`"))),
        }
    }
}

/// `1 / sqrt(j)` with the principal branch, `e^{-jπ/4}`.
fn inv_sqrt_j() -> Complex64 {
    Complex64::from_polar(1.0, -FRAC_PI_4)
}

fn require_positive_b(params: &OlctParams) -> Result<()> {
    if params.b > 0.0 {
        Ok(())
    } else {
        Err(Error::RequiresPositiveB(params.b))
    }
}

/// Kernel phase, in radians.
fn kernel_phase(p: &OlctParams, t: f64, u: f64) -> f64 {
    let b = p.b;
    p.a / (2.0 * b) * t * t - t * (u - p.tau) / b - u * (p.d * p.tau - b * p.eta) / b
        + p.d / (2.0 * b) * (u * u + p.tau * p.tau)
}

/// Output phase applied after the Fourier stage.
fn outer_phase(p: &OlctParams, u: f64) -> f64 {
    let b = p.b;
    -u * (p.d * p.tau - b * p.eta) / b + p.d / (2.0 * b) * (u * u + p.tau * p.tau)
}

/// `K_A(t, u)`. Its modulus is `(2πb)^{-1/2}` everywhere.
///
/// # Panics
/// If `params.b <= 0`.
pub fn kernel(params: &OlctParams, t: f64, u: f64) -> Complex64 {
    assert!(params.b > 0.0, "kernel is defined for b > 0 only");
    let amp = (2.0 * PI * params.b).sqrt().recip();
    inv_sqrt_j() * Complex64::from_polar(amp, kernel_phase(params, t, u))
}

/// The output lattice the fast engine produces for an input grid.
pub fn induced_grid(input: &Grid, params: &OlctParams) -> Result<Grid> {
    require_positive_b(params)?;
    let du = 2.0 * PI * params.b / (input.count as f64 * input.step);
    Grid::centered_at(params.tau, input.count, du)
}

/// Midpoint-rule quadrature against the kernel, one output per `out_grid` sample.
pub fn transform_direct(
    f: &SampledSignal,
    params: &OlctParams,
    out_grid: &Grid,
) -> Result<SampledSignal> {
    require_positive_b(params)?;
    let h = f.grid().step;
    let t: Vec<f64> = f.grid().coords().collect();
    let values = out_grid
        .coords()
        .map(|u| {
            let acc: Complex64 =
                t.iter().zip(f.values()).map(|(&tn, &fn_)| fn_ * kernel(params, tn, u)).sum();
            acc * h
        })
        .collect();
    SampledSignal::new(*out_grid, values)
}

/// Chirp, FFT, phase. Output lives on [`induced_grid`].
///
/// Same arithmetic as [`input_chirp`] followed by [`fourier_stage`] and the
/// outer phase, fused into one pass before and one after the FFT.
pub fn transform_fast(f: &SampledSignal, params: &OlctParams) -> Result<SampledSignal> {
    require_positive_b(params)?;
    let grid = f.grid();
    let n = grid.count;
    if !grid.is_pow2() {
        return Err(Error::GridNotPow2(n));
    }
    let out_grid = induced_grid(grid, params)?;
    let (a, b, tau, h, t0) = (params.a, params.b, params.tau, grid.step, grid.offset);
    let mut buf: Vec<Complex64> = f
        .values()
        .iter()
        .enumerate()
        .map(|(k, z)| {
            let kf = k as f64;
            let t = t0 + kf * h;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let phase = a / (2.0 * b) * t * t + t * tau / b - kf * h * tau / b - PI * kf / n as f64;
            z * Complex64::from_polar(sign, wrap(phase))
        })
        .collect();
    fft_forward(&mut buf);
    let amp = h / (2.0 * PI * b).sqrt();
    for (m, x) in buf.iter_mut().enumerate() {
        let u = out_grid.coord(m);
        *x *= Complex64::from_polar(amp, wrap(outer_phase(params, u) - t0 * u / b - FRAC_PI_4));
    }
    SampledSignal::new(out_grid, buf)
}

/// Reduce to about `[-π, π]`. Large chirp phases otherwise push `sin`/`cos`
/// onto their slow argument reduction.
fn wrap(phase: f64) -> f64 {
    phase - TAU * (phase / TAU).round()
}

thread_local! {
    static FFT: RefCell<(FftPlanner<f64>, Vec<Complex64>)> = RefCell::new((FftPlanner::new(), Vec::new()));
}

fn fft_forward(buf: &mut [Complex64]) {
    FFT.with(|cell| {
        let (planner, scratch) = &mut *cell.borrow_mut();
        let plan = planner.plan_fft_forward(buf.len());
        let len = plan.get_inplace_scratch_len();
        if scratch.len() < len {
            scratch.resize(len, Complex64::new(0.0, 0.0));
        }
        plan.process_with_scratch(buf, &mut scratch[..len]);
    });
}

/// `g(t) = f(t) exp{j a t²/(2b) + j t τ/b}`; same modulus as `f`.
pub fn input_chirp(f: &SampledSignal, params: &OlctParams) -> SampledSignal {
    let (a, b, tau) = (params.a, params.b, params.tau);
    f.modulated(|t| Complex64::from_polar(1.0, a / (2.0 * b) * t * t + t * tau / b))
}

/// `G(u_k) = (2π)^{-1/2} step Σ g(t_n) e^{-j t_n u_k / b}` on the induced grid.
///
/// `|O_A f(u)| = |G(u)| / sqrt(b)` at every output sample.
pub fn fourier_stage(g: &SampledSignal, params: &OlctParams) -> Result<SampledSignal> {
    require_positive_b(params)?;
    let grid = g.grid();
    let n = grid.count;
    if !grid.is_pow2() {
        return Err(Error::GridNotPow2(n));
    }
    let out_grid = induced_grid(grid, params)?;
    let (h, b, t0, u0) = (grid.step, params.b, grid.offset, params.tau);

    // u_m = u0 + (m + kappa) du with kappa = 1/2 - N/2, so
    // e^{-j t_n u_m / b} = e^{-j t0 u_m / b} e^{-j n h u0 / b} (-1)^n e^{-jπ n/N} e^{-2πj nm/N}.
    let mut buf: Vec<Complex64> = g
        .values()
        .iter()
        .enumerate()
        .map(|(k, z)| {
            let kf = k as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let phase = -kf * h * u0 / b - PI * kf / n as f64;
            z * Complex64::from_polar(sign, phase)
        })
        .collect();
    fft_forward(&mut buf);

    let norm = h / (2.0 * PI).sqrt();
    let values = out_grid
        .coords()
        .zip(buf)
        .map(|(u, x)| x * Complex64::from_polar(norm, -t0 * u / b))
        .collect();
    SampledSignal::new(out_grid, values)
}

/// Zero-pad the input by `factor` (a power of two) before the fast engine.
/// The output spacing shrinks by `factor`; the covered `u` range is unchanged.
pub fn transform_fast_oversampled(
    f: &SampledSignal,
    params: &OlctParams,
    factor: usize,
) -> Result<SampledSignal> {
    let padded = zero_pad(f, factor)?;
    transform_fast(&padded, params)
}

/// Embed `f` in a grid `factor` times longer with the same step.
pub fn zero_pad(f: &SampledSignal, factor: usize) -> Result<SampledSignal> {
    if factor == 0 || !factor.is_power_of_two() {
        return Err(Error::BadConfig(format!(
            "oversampling factor must be a power of two, got {factor}"
        )));
    }
    if factor == 1 {
        return Ok(f.clone());
    }
    let g = f.grid();
    let m = g.count * factor;
    let left = (m - g.count) / 2;
    let grid = Grid::new(g.offset - left as f64 * g.step, g.step, m)?;
    let mut values = vec![Complex64::new(0.0, 0.0); m];
    values[left..left + g.count].copy_from_slice(f.values());
    SampledSignal::new(grid, values)
}

/// The `b = 0` branch, evaluated on the input grid. `f(d(u − τ))` is read by
/// linear interpolation and is zero outside the input window.
pub fn transform_b0(f: &SampledSignal, params: &OlctParams) -> Result<SampledSignal> {
    if params.b != 0.0 {
        return Err(Error::RequiresZeroB(params.b));
    }
    if params.d == 0.0 {
        return Err(Error::DegenerateParams);
    }
    let (c, d, tau, eta) = (params.c, params.d, params.tau, params.eta);
    let sqrt_d = Complex64::new(d, 0.0).sqrt();
    let grid = *f.grid();
    let values = grid
        .coords()
        .map(|u| {
            let s = u - tau;
            let chirp = Complex64::from_polar(1.0, c * d / 2.0 * s * s + u * eta);
            sqrt_d * chirp * interpolate(f, d * s)
        })
        .collect();
    SampledSignal::new(grid, values)
}

fn interpolate(f: &SampledSignal, x: f64) -> Complex64 {
    let g = f.grid();
    let pos = (x - g.offset) / g.step;
    let last = (g.count - 1) as f64;
    // Snap positions within rounding of a node so exact resampling stays exact.
    let near = pos.round();
    if (pos - near).abs() < 1e-9 && (0.0..=last).contains(&near) {
        return f.values()[near as usize];
    }
    if !(0.0..=last).contains(&pos) {
        return Complex64::new(0.0, 0.0);
    }
    let lo = pos.floor() as usize;
    let w = pos - lo as f64;
    let v = f.values();
    v[lo] * (1.0 - w) + v[(lo + 1).min(g.count - 1)] * w
}

/// Any-branch forward transform. For `b > 0` both methods target the
/// induced grid so their outputs are directly comparable.
pub fn transform(f: &SampledSignal, params: &OlctParams, method: Method) -> Result<SampledSignal> {
    if params.b == 0.0 {
        return transform_b0(f, params);
    }
    match method {
        Method::Fast => transform_fast(f, params),
        Method::Direct => transform_direct(f, params, &induced_grid(f.grid(), params)?),
    }
}

/// Spectrum used by the verification suite: the `factor`-times oversampled
/// induced grid, through the FFT when the count allows it.
pub fn spectrum(f: &SampledSignal, params: &OlctParams, factor: usize) -> Result<SampledSignal> {
    if params.b == 0.0 {
        return transform_b0(f, params);
    }
    if f.grid().is_pow2() {
        transform_fast_oversampled(f, params, factor)
    } else {
        if factor == 0 {
            return Err(Error::BadConfig("oversampling factor must be positive".into()));
        }
        let g = f.grid();
        let fine = Grid::new(g.offset, g.step, g.count * factor)?;
        transform_direct(f, params, &induced_grid(&fine, params)?)
    }
}

/// Adjoint of the forward kernel: `f(t) = ∫ F(u) conj(K_A(t, u)) du`.
///
/// Exact inverse of the forward transform on its induced grid.
pub fn inverse_transform(
    spectrum: &SampledSignal,
    params: &OlctParams,
    out_grid: &Grid,
) -> Result<SampledSignal> {
    require_positive_b(params)?;
    let du = spectrum.grid().step;
    let u: Vec<f64> = spectrum.grid().coords().collect();
    let values = out_grid
        .coords()
        .map(|t| {
            let acc: Complex64 = u
                .iter()
                .zip(spectrum.values())
                .map(|(&um, &fm)| fm * kernel(params, t, um).conj())
                .sum();
            acc * du
        })
        .collect();
    SampledSignal::new(*out_grid, values)
}
