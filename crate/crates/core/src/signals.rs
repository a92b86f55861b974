//! Deterministic test signals. Every generator returns a unit-norm signal.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, SampledSignal};
use crate::measures::l2_norm;
use crate::params::OlctParams;

pub const DEFAULT_COUNT: usize = 1024;
pub const DEFAULT_HALF_WIDTH: f64 = 12.0;
pub const DEFAULT_NOISE_SEED: u64 = 42;
/// `α` with `πα = 1/2`, the rate of `e^{-t²/2}`.
pub const UNIT_GAUSSIAN_ALPHA: f64 = 0.5 / PI;

/// N = 1024 on `[-12, 12]`.
pub fn default_grid() -> Grid {
    Grid::window(DEFAULT_COUNT, DEFAULT_HALF_WIDTH).expect("static grid is valid")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SignalKind {
    /// `(πσ²)^{-1/4} e^{-t²/(2σ²)}`; `σ = 1` gives `|f|²` = Normal(0, 1/2).
    Gaussian { sigma: f64 },
    /// `C e^{-(πα + j a/(2b)) t² - j t τ / b}`, the equality case of Hardy's
    /// theorem for the given parameters.
    ChirpedGaussianExtremal { params: OlctParams, alpha: f64 },
    /// Hermite function of the given order.
    Hermite { order: usize },
    /// Indicator of `[-width/2, width/2]`.
    Rect { width: f64 },
    /// Random phases on the lowest `bins` DFT frequencies on each side,
    /// inverse transformed and shaped by `e^{-t²/(2 envelope²)}`.
    BandlimitedNoise { seed: u64, bins: usize, envelope: f64 },
}

impl SignalKind {
    pub fn unit_gaussian() -> Self {
        SignalKind::Gaussian { sigma: 1.0 }
    }

    pub fn noise(seed: u64) -> Self {
        SignalKind::BandlimitedNoise { seed, bins: 8, envelope: 2.0 }
    }

    /// Short label used in reports.
    pub fn label(&self) -> String {
        match self {
            SignalKind::Gaussian { .. } => "gaussian".into(),
            SignalKind::ChirpedGaussianExtremal { .. } => "extremal".into(),
            SignalKind::Hermite { order } => format!("hermite{order}"),
            SignalKind::Rect { .. } => "rect".into(),
            SignalKind::BandlimitedNoise { .. } => "noise".into(),
        }
    }

    /// Smooth and rapidly decaying. Rect pulses are not.
    pub fn is_schwartz(&self) -> bool {
        !matches!(self, SignalKind::Rect { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalSpec {
    #[serde(flatten)]
    pub kind: SignalKind,
    pub grid: Grid,
}

impl SignalSpec {
    pub fn new(kind: SignalKind, grid: Grid) -> Self {
        Self { kind, grid }
    }
}

pub fn generate(spec: &SignalSpec) -> Result<SampledSignal> {
    let grid = spec.grid;
    let raw = match &spec.kind {
        SignalKind::Gaussian { sigma } => {
            positive("sigma", *sigma)?;
            let amp = (PI * sigma * sigma).powf(-0.25);
            SampledSignal::from_fn(grid, |t| {
                Complex64::new(amp * (-t * t / (2.0 * sigma * sigma)).exp(), 0.0)
            })?
        }
        SignalKind::ChirpedGaussianExtremal { params, alpha } => {
            positive("alpha", *alpha)?;
            if !(params.b > 0.0) {
                return Err(Error::BadSpec("extremal needs parameters with b > 0".into()));
            }
            let (a, b, tau) = (params.a, params.b, params.tau);
            let amp = (2.0 * alpha).powf(0.25);
            SampledSignal::from_fn(grid, |t| {
                amp * Complex64::new(-PI * alpha * t * t, -a / (2.0 * b) * t * t - t * tau / b)
                    .exp()
            })?
        }
        SignalKind::Hermite { order } => hermite(grid, *order)?,
        SignalKind::Rect { width } => {
            positive("width", *width)?;
            SampledSignal::from_fn(grid, |t| {
                Complex64::new(if t.abs() <= width / 2.0 { 1.0 } else { 0.0 }, 0.0)
            })?
        }
        SignalKind::BandlimitedNoise { seed, bins, envelope } => {
            positive("envelope", *envelope)?;
            noise(grid, *seed, *bins, *envelope)?
        }
    };
    let norm = l2_norm(&raw);
    if !(norm > 0.0) {
        return Err(Error::BadSpec(format!(
            "{} has no energy on this grid",
            spec.kind.label()
        )));
    }
    Ok(raw.scaled(Complex64::new(norm.recip(), 0.0)))
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::BadSpec(format!("{name} must be positive and finite, got {v}")))
    }
}

fn hermite(grid: Grid, order: usize) -> Result<SampledSignal> {
    SampledSignal::from_fn(grid, |t| {
        let mut prev = 0.0;
        let mut cur = PI.powf(-0.25) * (-t * t / 2.0).exp();
        for k in 0..order {
            let kf = k as f64;
            let next = (2.0 / (kf + 1.0)).sqrt() * t * cur - (kf / (kf + 1.0)).sqrt() * prev;
            prev = cur;
            cur = next;
        }
        Complex64::new(cur, 0.0)
    })
}

fn noise(grid: Grid, seed: u64, bins: usize, envelope: f64) -> Result<SampledSignal> {
    let n = grid.count;
    if 2 * bins + 1 > n {
        return Err(Error::BadSpec(format!("{bins} bins do not fit a {n}-sample grid")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for k in -(bins as i64)..=(bins as i64) {
        let phase = 2.0 * PI * rng.random::<f64>();
        buf[k.rem_euclid(n as i64) as usize] = Complex64::from_polar(1.0, phase);
    }
    FftPlanner::<f64>::new().plan_fft_inverse(n).process(&mut buf);
    let values = grid
        .coords()
        .zip(buf)
        .map(|(t, z)| z * (-t * t / (2.0 * envelope * envelope)).exp())
        .collect();
    SampledSignal::new(grid, values)
}

/// The default test battery for one parameter set: unit Gaussian, the
/// chirped extremal (when `b > 0`), Hermite 1..=3, unit rect, seeded noise.
pub fn battery(params: &OlctParams, grid: Grid) -> Vec<SignalSpec> {
    let mut kinds = vec![SignalKind::unit_gaussian()];
    if params.b > 0.0 {
        kinds.push(SignalKind::ChirpedGaussianExtremal {
            params: *params,
            alpha: UNIT_GAUSSIAN_ALPHA,
        });
    }
    kinds.extend((1..=3).map(|order| SignalKind::Hermite { order }));
    kinds.push(SignalKind::Rect { width: 1.0 });
    kinds.push(SignalKind::noise(DEFAULT_NOISE_SEED));
    kinds.into_iter().map(|k| SignalSpec::new(k, grid)).collect()
}
