//! The six-parameter matrix `[a b | tau; c d | eta]` of an offset linear
//! canonical transform.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance on `|ad - bc - 1|`.
pub const SYMPLECTIC_TOL: f64 = 1e-12;

/// Validated transform parameters. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OlctParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub tau: f64,
    pub eta: f64,
}

impl OlctParams {
    /// Validate with the default symplectic tolerance.
    pub fn new(a: f64, b: f64, c: f64, d: f64, tau: f64, eta: f64) -> Result<Self> {
        Self::with_tolerance(a, b, c, d, tau, eta, SYMPLECTIC_TOL)
    }

    pub fn with_tolerance(
        a: f64,
        b: f64,
        c: f64,
        d: f64,
        tau: f64,
        eta: f64,
        tol: f64,
    ) -> Result<Self> {
        if ![a, b, c, d, tau, eta].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("transform parameters"));
        }
        let det = a * d - b * c;
        if (det - 1.0).abs() > tol {
            return Err(Error::SymplecticViolation { det, tol });
        }
        if b < 0.0 {
            return Err(Error::NegativeB(b));
        }
        Ok(Self { a, b, c, d, tau, eta })
    }

    /// Parse `a,b,c,d,tau,eta`.
    pub fn parse(s: &str) -> Result<Self> {
        let vals: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::BadConfig(format!("params `{s}`: {e}")))?;
        match vals[..] {
            [a, b, c, d, tau, eta] => Self::new(a, b, c, d, tau, eta),
            _ => Err(Error::BadConfig(format!(
                "params `{s}`: expected 6 comma-separated numbers, got {}",
                vals.len()
            ))),
        }
    }

    /// `(0, 1, -1, 0, 0, 0)`: the unitary Fourier transform (up to a constant phase).
    pub fn fourier() -> Self {
        Self { a: 0.0, b: 1.0, c: -1.0, d: 0.0, tau: 0.0, eta: 0.0 }
    }

    /// Fractional Fourier transform of angle `alpha`. Fails for angles with
    /// `sin(alpha) < 0`, which would need the unsupported `b < 0` branch.
    pub fn fractional(alpha: f64) -> Result<Self> {
        let (s, c) = alpha.sin_cos();
        Self::new(c, s, -s, c, 0.0, 0.0)
    }

    /// Linear canonical transform: zero offsets.
    pub fn linear_canonical(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(a, b, c, d, 0.0, 0.0)
    }

    /// A valid parameter set with `b' = s * b` and `c' = c / s`; `a`, `d`
    /// and the offsets are kept.
    pub fn rescale_b(&self, s: f64) -> Result<Self> {
        Self::new(self.a, self.b * s, self.c / s, self.d, self.tau, self.eta)
    }

    pub fn is_integral_branch(&self) -> bool {
        self.b > 0.0
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.tau, self.eta]
    }
}
