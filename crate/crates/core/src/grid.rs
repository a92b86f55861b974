//! Uniform sampling lattices and the sampled objects that live on them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the integral of a density flagged as normalized.
pub const DENSITY_NORM_TOL: f64 = 1e-6;

/// Sample `n` sits at `offset + n * step`. Each sample owns the cell
/// `[t_n - step/2, t_n + step/2]`, so the cells tile the window exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub offset: f64,
    pub step: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(offset: f64, step: f64, count: usize) -> Result<Self> {
        if !offset.is_finite() || !step.is_finite() {
            return Err(Error::NonFinite("grid"));
        }
        if step <= 0.0 {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        if count == 0 {
            return Err(Error::InvalidGrid("count must be positive".into()));
        }
        Ok(Self { offset, step, count })
    }

    /// Half-sample centered grid: symmetric about 0 and never sampling 0.
    pub fn centered(count: usize, step: f64) -> Result<Self> {
        Self::centered_at(0.0, count, step)
    }

    /// Half-sample centered about `center`.
    pub fn centered_at(center: f64, count: usize, step: f64) -> Result<Self> {
        Self::new(center - (count as f64 / 2.0 - 0.5) * step, step, count)
    }

    /// `count` cells tiling `[-half_width, half_width]`.
    pub fn window(count: usize, half_width: f64) -> Result<Self> {
        if !(half_width > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "half width must be positive, got {half_width}"
            )));
        }
        Self::centered(count, 2.0 * half_width / count as f64)
    }

    #[inline]
    pub fn coord(&self, n: usize) -> f64 {
        self.offset + n as f64 * self.step
    }

    pub fn coords(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |n| self.coord(n))
    }

    /// Left edge of the first cell.
    pub fn lower(&self) -> f64 {
        self.offset - 0.5 * self.step
    }

    /// Right edge of the last cell.
    pub fn upper(&self) -> f64 {
        self.coord(self.count - 1) + 0.5 * self.step
    }

    pub fn cell(&self, n: usize) -> (f64, f64) {
        let t = self.coord(n);
        (t - 0.5 * self.step, t + 0.5 * self.step)
    }

    pub fn is_pow2(&self) -> bool {
        self.count.is_power_of_two()
    }

    /// First sample whose coordinate is zero up to `step * 1e-9`.
    pub fn zero_sample(&self) -> Option<usize> {
        let eps = self.step * 1e-9;
        self.coords().position(|t| t.abs() < eps)
    }
}

/// Complex samples on a grid; the discrete stand-in for `f in L^2(R)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    grid: Grid,
    values: Vec<Complex64>,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count {
            return Err(Error::LengthMismatch { expected: grid.count, got: values.len() });
        }
        if !values.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("signal samples"));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = grid.coords().map(f).collect();
        Self::new(grid, values)
    }

    pub fn zeros(grid: Grid) -> Self {
        Self { grid, values: vec![Complex64::new(0.0, 0.0); grid.count] }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `step * sum |f_n|^2`.
    pub fn energy(&self) -> f64 {
        self.grid.step * self.values.iter().map(|z| z.norm_sqr()).sum::<f64>()
    }

    pub fn scaled(&self, alpha: Complex64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|z| z * alpha).collect() }
    }

    /// Pointwise product with `h(t)`.
    pub fn modulated(&self, h: impl Fn(f64) -> Complex64) -> Self {
        let values = self.grid.coords().zip(&self.values).map(|(t, z)| z * h(t)).collect();
        Self { grid: self.grid, values }
    }

    /// `alpha * self + other` on the same grid.
    pub fn axpy(&self, alpha: Complex64, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::InvalidGrid("axpy operands live on different grids".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(x, y)| alpha * x + y).collect();
        Ok(Self { grid: self.grid, values })
    }
}

/// Nonnegative samples on a grid; `|f|^2` and friends.
#[derive(Debug, Clone, PartialEq)]
pub struct Density {
    grid: Grid,
    values: Vec<f64>,
    normalized: bool,
}

impl Density {
    /// Build a density. When `normalized` is set the midpoint integral must
    /// be within [`DENSITY_NORM_TOL`] of 1.
    pub fn new(grid: Grid, values: Vec<f64>, normalized: bool) -> Result<Self> {
        if values.len() != grid.count {
            return Err(Error::LengthMismatch { expected: grid.count, got: values.len() });
        }
        if !values.iter().all(|v| v.is_finite() && *v >= 0.0) {
            return Err(Error::NonFinite("density must be finite and nonnegative"));
        }
        let d = Self { grid, values, normalized };
        if normalized {
            let mass = d.mass();
            if (mass - 1.0).abs() > DENSITY_NORM_TOL {
                return Err(Error::NotNormalized { norm: mass.sqrt() });
            }
        }
        Ok(d)
    }

    /// Rescale arbitrary nonnegative samples to unit mass.
    pub fn normalize(grid: Grid, values: Vec<f64>) -> Result<Self> {
        let raw = Self::new(grid, values, false)?;
        let mass = raw.mass();
        if !(mass > 0.0) {
            return Err(Error::ZeroSignal);
        }
        let values = raw.values.iter().map(|v| v / mass).collect();
        Ok(Self { grid, values, normalized: true })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Midpoint integral.
    pub fn mass(&self) -> f64 {
        self.grid.step * self.values.iter().sum::<f64>()
    }
}
