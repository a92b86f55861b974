//! Uncertainty-principle certificates for a signal and its transform.
//!
//! Each check computes both sides of one inequality on the sampled signal
//! `f` and on its transform, evaluated on the oversampled induced grid
//! (see [`crate::transform::spectrum`]). The result is a [`Certificate`].
//!
//! | check        | lhs                                   | rhs                         | kind |
//! |--------------|---------------------------------------|-----------------------------|------|
//! | heisenberg   | `V(|f|²) V(|O f|²)`                   | `b²/4`                      | ≥    |
//! | entropic     | `E(|f|²) + E(|O f|²)`                 | `ln(π e b)`                 | ≥    |
//! | logarithmic  | `∫|f|² ln|t| + ∫|O f|² ln|u|`         | `ln b + ψ(1/4)`             | ≥    |
//! | pitt         | `b^λ ∫|u|^{-λ}|O f|²`                 | `M_λ ∫|t|^λ |f|²`           | ≤    |
//! | hardy        | fitted slope of `ln|O f|` vs `u²`     | `-1/(4παb²)`                | ≈    |
//! | beurling     | log growth of the truncated integral  | log of the growth threshold | ≥    |
//! | nazarov      | `ε_T + ε_Ω` tail energies             | 0                           | >    |
//!
//! The Nazarov constant is not estimated; that certificate only reports
//! that the two tails cannot both vanish.

use std::collections::BTreeMap;
use std::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Density, SampledSignal};
use crate::measures::{
    beurling_log_functional, density_of, l2_norm, log_moment, mean_variance, shannon_entropy,
    tail_energy, weighted_moment, IntervalSet, WeightSign,
};
use crate::params::OlctParams;
use crate::special::{digamma, pitt_constant};
use crate::transform::spectrum;

/// Allowed deviation of `||f||₂` from 1 for the normalized checks.
pub const NORM_TOL: f64 = 1e-6;
/// Analytic slack on every quadrature-based inequality.
pub const ANALYTIC_TOL: f64 = 1e-6;
/// Midpoint-rule headroom at N = 1024 on `[-12, 12]`.
pub const DISCRETIZATION_ALLOWANCE: f64 = 1e-3;
/// Default zero-padding factor for the transform side.
pub const DEFAULT_OVERSAMPLE: usize = 8;
/// Relative slope tolerance for the Hardy extremal.
pub const HARDY_SLOPE_TOL: f64 = 0.01;
/// An envelope ratio above this is read as divergence.
pub const HARDY_DIVERGENCE: f64 = 1e6;
/// Samples below this fraction of the peak are ignored by the Hardy fits.
pub const HARDY_FLOOR: f64 = 1e-12;
/// Pointwise agreement with the Hardy extremal form, relative to the peak.
pub const EXTREMAL_MATCH_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckName {
    Nazarov,
    Hardy,
    Beurling,
    Pitt,
    Logarithmic,
    Entropic,
    Heisenberg,
}

impl CheckName {
    pub const ALL: [CheckName; 7] = [
        CheckName::Nazarov,
        CheckName::Hardy,
        CheckName::Beurling,
        CheckName::Pitt,
        CheckName::Logarithmic,
        CheckName::Entropic,
        CheckName::Heisenberg,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::Nazarov => "nazarov",
            CheckName::Hardy => "hardy",
            CheckName::Beurling => "beurling",
            CheckName::Pitt => "pitt",
            CheckName::Logarithmic => "logarithmic",
            CheckName::Entropic => "entropic",
            CheckName::Heisenberg => "heisenberg",
        }
    }
}

impl std::fmt::Display for CheckName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::BadConfig(format!("unknown check `{s}`")))
    }
}

/// Parse a `--suite` selector: `all`, `none`, or a comma-separated list.
pub fn parse_checks(s: &str) -> Result<Vec<CheckName>> {
    match s.trim() {
        "all" => Ok(CheckName::ALL.to_vec()),
        "none" | "" => Ok(Vec::new()),
        list => {
            let mut v = list.split(',').map(|p| p.trim().parse()).collect::<Result<Vec<_>>>()?;
            v.sort();
            v.dedup();
            Ok(v)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MetaValue {
    Bool(bool),
    Num(f64),
    List(Vec<f64>),
    Text(String),
}

impl From<f64> for MetaValue {
    fn from(v: f64) -> Self {
        MetaValue::Num(v)
    }
}

impl From<bool> for MetaValue {
    fn from(v: bool) -> Self {
        MetaValue::Bool(v)
    }
}

impl From<Vec<f64>> for MetaValue {
    fn from(v: Vec<f64>) -> Self {
        MetaValue::List(v)
    }
}

impl From<&str> for MetaValue {
    fn from(v: &str) -> Self {
        MetaValue::Text(v.to_owned())
    }
}

/// One inequality evaluated on one signal/parameter pair.
///
/// `margin = lhs - rhs` for lower bounds and `rhs - lhs` for upper bounds;
/// `pass` iff `margin >= -tol`, with `tol` stored in `meta`. Informational
/// certificates record a measurement the finite window cannot turn into a
/// verdict and do not count toward an overall pass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: CheckName,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
    #[serde(default)]
    pub informational: bool,
    pub meta: BTreeMap<String, MetaValue>,
}

impl Certificate {
    fn new(name: CheckName, lhs: f64, rhs: f64, margin: f64, pass: bool) -> Self {
        Self { name, lhs, rhs, margin, pass, informational: false, meta: BTreeMap::new() }
    }

    fn lower_bound(name: CheckName, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = lhs - rhs;
        Self::new(name, lhs, rhs, margin, margin >= -tol).with("tol", tol)
    }

    fn upper_bound(name: CheckName, lhs: f64, rhs: f64, tol: f64) -> Self {
        let margin = rhs - lhs;
        Self::new(name, lhs, rhs, margin, margin >= -tol).with("tol", tol)
    }

    fn with(mut self, key: &str, value: impl Into<MetaValue>) -> Self {
        self.meta.insert(key.to_owned(), value.into());
        self
    }

    pub fn meta_num(&self, key: &str) -> Option<f64> {
        match self.meta.get(key) {
            Some(MetaValue::Num(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn meta_bool(&self, key: &str) -> Option<bool> {
        match self.meta.get(key) {
            Some(MetaValue::Bool(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn meta_list(&self, key: &str) -> Option<&[f64]> {
        match self.meta.get(key) {
            Some(MetaValue::List(v)) => Some(v),
            _ => None,
        }
    }

    /// Counts toward an overall verdict and failed.
    pub fn is_failure(&self) -> bool {
        !self.pass && !self.informational
    }
}

/// Pass threshold: `analytic + allowance`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub analytic: f64,
    pub allowance: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { analytic: ANALYTIC_TOL, allowance: DISCRETIZATION_ALLOWANCE }
    }
}

impl Tolerance {
    pub fn total(&self) -> f64 {
        self.analytic + self.allowance
    }
}

/// Shared state for the checks on one `(f, params)` pair: the transform is
/// computed once.
#[derive(Debug, Clone)]
pub struct Verifier<'a> {
    f: &'a SampledSignal,
    params: OlctParams,
    spectrum: SampledSignal,
    tol: Tolerance,
}

impl<'a> Verifier<'a> {
    pub fn new(f: &'a SampledSignal, params: &OlctParams) -> Result<Self> {
        Self::with_options(f, params, DEFAULT_OVERSAMPLE, Tolerance::default())
    }

    pub fn with_options(
        f: &'a SampledSignal,
        params: &OlctParams,
        oversample: usize,
        tol: Tolerance,
    ) -> Result<Self> {
        if !(params.b > 0.0) {
            return Err(Error::RequiresPositiveB(params.b));
        }
        let spectrum = spectrum(f, params, oversample)?;
        Ok(Self { f, params: *params, spectrum, tol })
    }

    pub fn spectrum(&self) -> &SampledSignal {
        &self.spectrum
    }

    fn require_unit_norm(&self) -> Result<()> {
        let norm = l2_norm(self.f);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(())
    }

    fn densities(&self) -> Result<(Density, Density)> {
        self.require_unit_norm()?;
        Ok((density_of(self.f)?, density_of(&self.spectrum)?))
    }

    /// `V(|f|²) V(|O_A f|²) >= b²/4`.
    pub fn heisenberg(&self) -> Result<Certificate> {
        let (rho_t, rho_u) = self.densities()?;
        let (mt, vt) = mean_variance(&rho_t);
        let (mu, vu) = mean_variance(&rho_u);
        let b = self.params.b;
        let rhs = b * b / 4.0;
        Ok(Certificate::lower_bound(CheckName::Heisenberg, vt * vu, rhs, self.tol.total() * b * b)
            .with("b", b)
            .with("mean_time", mt)
            .with("var_time", vt)
            .with("mean_freq", mu)
            .with("var_freq", vu))
    }

    /// `E(|f|²) + E(|O_A f|²) >= ln(π e b)`.
    pub fn entropic(&self) -> Result<Certificate> {
        let (rho_t, rho_u) = self.densities()?;
        let (et, eu) = (shannon_entropy(&rho_t), shannon_entropy(&rho_u));
        let b = self.params.b;
        Ok(Certificate::lower_bound(CheckName::Entropic, et + eu, (PI * E * b).ln(), self.tol.total())
            .with("b", b)
            .with("entropy_time", et)
            .with("entropy_freq", eu))
    }

    /// `∫|f|² ln|t| + ∫|O_A f|² ln|u| >= ln b + ψ(1/4)`.
    pub fn logarithmic(&self) -> Result<Certificate> {
        let (rho_t, rho_u) = self.densities()?;
        let (lt, lu) = (log_moment(&rho_t)?, log_moment(&rho_u)?);
        let b = self.params.b;
        let rhs = b.ln() + digamma(0.25)?;
        Ok(Certificate::lower_bound(CheckName::Logarithmic, lt + lu, rhs, self.tol.total())
            .with("b", b)
            .with("log_moment_time", lt)
            .with("log_moment_freq", lu))
    }

    /// `b^λ ∫|u|^{-λ}|O_A f|² <= M_λ ∫|t|^λ |f|²`, on the unnormalized
    /// squared moduli.
    pub fn pitt(&self, lambda: f64) -> Result<Certificate> {
        let m = pitt_constant(lambda)?;
        let b = self.params.b;
        let sq = |s: &SampledSignal| -> Result<Density> {
            Density::new(*s.grid(), s.values().iter().map(|z| z.norm_sqr()).collect(), false)
        };
        let freq = weighted_moment(&sq(&self.spectrum)?, lambda, WeightSign::Negative)?;
        let time = weighted_moment(&sq(self.f)?, lambda, WeightSign::Positive)?;
        Ok(Certificate::upper_bound(CheckName::Pitt, b.powf(lambda) * freq, m.value * time, self.tol.total())
            .with("lambda", lambda)
            .with("pitt_constant", m.value)
            .with("b", b))
    }

    /// Decay-rate check at rate `α`.
    ///
    /// Signals of the extremal form `C e^{-(πα + j a/(2b)) t² - j t τ/b}`
    /// must show a Gaussian spectrum with `ln|O_A f|` slope `-1/(4παb²)`
    /// in `u²`. Any other signal must break one of the two envelopes
    /// `|f| e^{παt²}` and `|O_A f| e^{u²/(4παb²)}`; when neither ratio
    /// exceeds [`HARDY_DIVERGENCE`] inside the window the certificate is
    /// informational.
    pub fn hardy(&self, alpha: f64) -> Result<Certificate> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::BadConfig(format!("hardy alpha must be positive, got {alpha}")));
        }
        let peak_t = peak(self.f);
        if peak_t == 0.0 {
            return Err(Error::ZeroSignal);
        }
        let b = self.params.b;
        let freq_rate = 1.0 / (4.0 * PI * alpha * b * b);
        let time_log = log_envelope(self.f, |t| PI * alpha * t * t);
        let freq_log = log_envelope(&self.spectrum, |u| freq_rate * u * u);
        let slope = log_modulus_slope(&self.spectrum);
        let rhs = -freq_rate;
        let extremal = self.is_extremal(alpha);
        let threshold = HARDY_DIVERGENCE.ln();

        let mut cert = if extremal {
            let rel = (slope / rhs - 1.0).abs();
            Certificate::new(CheckName::Hardy, slope, rhs, HARDY_SLOPE_TOL - rel, rel <= HARDY_SLOPE_TOL)
        } else {
            let worst = time_log.max(freq_log);
            let diverges = worst > threshold;
            let mut c = Certificate::new(CheckName::Hardy, slope, rhs, worst - threshold, diverges);
            c.informational = !diverges;
            c
        };
        cert = cert
            .with("alpha", alpha)
            .with("b", b)
            .with("extremal", extremal)
            .with("time_envelope_log", time_log)
            .with("freq_envelope_log", freq_log)
            .with("divergence_log_threshold", threshold)
            .with("tol", HARDY_SLOPE_TOL);
        Ok(cert)
    }

    /// True if `f e^{j a t²/(2b) + j t τ/b} e^{παt²}` is constant on the
    /// samples that carry signal.
    fn is_extremal(&self, alpha: f64) -> bool {
        let (a, b, tau) = (self.params.a, self.params.b, self.params.tau);
        let g: Vec<(f64, num_complex::Complex64)> = self
            .f
            .grid()
            .coords()
            .zip(self.f.values())
            .map(|(t, z)| (t, z * num_complex::Complex64::from_polar(1.0, a * t * t / (2.0 * b) + t * tau / b)))
            .collect();
        let Some(&(t0, g0)) = g.iter().max_by(|x, y| x.1.norm().total_cmp(&y.1.norm())) else {
            return false;
        };
        let c = g0 * (PI * alpha * t0 * t0).exp();
        let cutoff = 1e-8 * g0.norm();
        g.iter()
            .filter(|(_, z)| z.norm() > cutoff)
            .all(|&(t, z)| (z * (PI * alpha * t * t).exp() - c).norm() <= EXTREMAL_MATCH_TOL * c.norm())
    }

    /// Growth of the truncated double integral over increasing windows.
    ///
    /// Passes when the values strictly increase and
    /// `value(W_last)/value(W_first) >= W_last / (2 W_first)`, i.e. the
    /// integral keeps growing at no less than half the linear rate the
    /// critical Gaussian shows. A zero signal passes on the `f = 0` branch.
    pub fn beurling(&self, windows: &[f64]) -> Result<Certificate> {
        if windows.len() < 2 || windows.windows(2).any(|w| w[1] <= w[0]) || windows[0] <= 0.0 {
            return Err(Error::BadConfig(
                "beurling windows must be positive, strictly increasing, at least two".into(),
            ));
        }
        let b = self.params.b;
        let logs = windows
            .iter()
            .map(|&w| beurling_log_functional(self.f, &self.spectrum, b, w))
            .collect::<Result<Vec<f64>>>()?;
        let first = windows[0];
        let last = windows[windows.len() - 1];
        let rhs = (last / (2.0 * first)).ln();
        if logs.iter().all(|v| *v == f64::NEG_INFINITY) {
            return Ok(Certificate::new(CheckName::Beurling, 0.0, 0.0, 0.0, true)
                .with("zero_signal", true)
                .with("windows", windows.to_vec())
                .with("values", vec![0.0; windows.len()]));
        }
        let increasing = logs.windows(2).all(|w| w[1] > w[0]);
        let growth = match (logs[0], logs[logs.len() - 1]) {
            (lo, hi) if lo == f64::NEG_INFINITY && hi.is_finite() => f64::MAX,
            (lo, hi) => hi - lo,
        };
        let pass = increasing && growth >= rhs;
        let values: Vec<f64> = logs.iter().map(|v| v.exp().min(f64::MAX)).collect();
        Ok(Certificate::new(CheckName::Beurling, growth, rhs, growth - rhs, pass)
            .with("zero_signal", false)
            .with("b", b)
            .with("windows", windows.to_vec())
            .with("log_values", logs.iter().map(|v| v.max(-f64::MAX)).collect::<Vec<_>>())
            .with("values", values)
            .with("strictly_increasing", increasing)
            .with("ratio", growth.exp().min(f64::MAX)))
    }

    /// Tail energies outside `T` in time and outside `Ω·b` in frequency.
    pub fn nazarov(&self, t_set: &IntervalSet, omega: &IntervalSet) -> Result<Certificate> {
        self.require_unit_norm()?;
        let b = self.params.b;
        let omega_b = omega.scale(b)?;
        let eps_t = tail_energy(self.f, t_set);
        let eps_omega = tail_energy(&self.spectrum, &omega_b);
        let lhs = eps_t + eps_omega;
        let tg = self.f.grid();
        let ug = self.spectrum.grid();
        let within = t_set.covers(tg.lower(), tg.upper()) && omega_b.covers(ug.lower(), ug.upper());
        let mut cert = Certificate::new(CheckName::Nazarov, lhs, 0.0, lhs, lhs > 0.0)
            .with("b", b)
            .with("measure_T", t_set.measure())
            .with("measure_Omega", omega.measure())
            .with("eps_T", eps_t)
            .with("eps_Omega", eps_omega)
            .with("support_within_window", within);
        cert.informational = within;
        Ok(cert)
    }
}

fn peak(s: &SampledSignal) -> f64 {
    s.values().iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max ln(|s(x)| e^{w(x)} / max|s|)` over samples above the floor.
fn log_envelope(s: &SampledSignal, w: impl Fn(f64) -> f64) -> f64 {
    let top = peak(s);
    if top == 0.0 {
        return f64::NEG_INFINITY;
    }
    s.grid()
        .coords()
        .zip(s.values())
        .filter(|(_, z)| z.norm() > HARDY_FLOOR * top)
        .map(|(x, z)| (z.norm() / top).ln() + w(x))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Least-squares slope of `ln|s(u)|` against `u²` above the floor.
fn log_modulus_slope(s: &SampledSignal) -> f64 {
    let top = peak(s);
    let pts: Vec<(f64, f64)> = s
        .grid()
        .coords()
        .zip(s.values())
        .filter(|(_, z)| z.norm() > HARDY_FLOOR * top)
        .map(|(u, z)| (u * u, z.norm().ln()))
        .collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return 0.0;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

pub fn verify_heisenberg(f: &SampledSignal, params: &OlctParams) -> Result<Certificate> {
    Verifier::new(f, params)?.heisenberg()
}

pub fn verify_entropic(f: &SampledSignal, params: &OlctParams) -> Result<Certificate> {
    Verifier::new(f, params)?.entropic()
}

pub fn verify_logarithmic(f: &SampledSignal, params: &OlctParams) -> Result<Certificate> {
    Verifier::new(f, params)?.logarithmic()
}

pub fn verify_pitt(f: &SampledSignal, params: &OlctParams, lambda: f64) -> Result<Certificate> {
    pitt_constant(lambda)?;
    Verifier::new(f, params)?.pitt(lambda)
}

pub fn verify_hardy(f: &SampledSignal, params: &OlctParams, alpha: f64) -> Result<Certificate> {
    Verifier::new(f, params)?.hardy(alpha)
}

pub fn verify_beurling(
    f: &SampledSignal,
    params: &OlctParams,
    windows: &[f64],
) -> Result<Certificate> {
    Verifier::new(f, params)?.beurling(windows)
}

pub fn nazarov_report(
    f: &SampledSignal,
    params: &OlctParams,
    t_set: &IntervalSet,
    omega: &IntervalSet,
) -> Result<Certificate> {
    Verifier::new(f, params)?.nazarov(t_set, omega)
}

/// Which checks to run and with what settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub checks: Vec<CheckName>,
    pub lambdas: Vec<f64>,
    pub alphas: Vec<f64>,
    pub windows: Vec<f64>,
    pub nazarov_sets: Vec<(IntervalSet, IntervalSet)>,
    pub oversample: usize,
    pub tol: Tolerance,
    /// The signal is smooth and rapidly decaying. When false, Pitt
    /// certificates are informational.
    pub schwartz: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let unit = IntervalSet::symmetric(1.0).expect("static interval");
        Self {
            checks: CheckName::ALL.to_vec(),
            lambdas: vec![0.5],
            alphas: vec![crate::signals::UNIT_GAUSSIAN_ALPHA],
            windows: vec![2.0, 4.0, 6.0, 8.0],
            nazarov_sets: vec![(unit.clone(), unit)],
            oversample: DEFAULT_OVERSAMPLE,
            tol: Tolerance::default(),
            schwartz: true,
        }
    }
}

impl SuiteConfig {
    /// No checks at all.
    pub fn empty() -> Self {
        Self { checks: Vec::new(), ..Self::default() }
    }

    pub fn only(checks: &[CheckName]) -> Self {
        Self { checks: checks.to_vec(), ..Self::default() }
    }
}

/// A check that could not be evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckError {
    pub check: CheckName,
    pub error: Error,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SuiteOutcome {
    pub certificates: Vec<Certificate>,
    pub errors: Vec<CheckError>,
}

impl SuiteOutcome {
    /// No errors and no failed non-informational certificate.
    pub fn pass(&self) -> bool {
        self.errors.is_empty() && !self.certificates.iter().any(Certificate::is_failure)
    }
}

/// Run every configured check. Output order follows [`CheckName::ALL`]
/// and, within a check, the configured parameter lists. Errors are
/// collected per check and never abort the batch.
pub fn run_suite(f: &SampledSignal, params: &OlctParams, config: &SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    if checks.is_empty() {
        return out;
    }
    let verifier = match Verifier::with_options(f, params, config.oversample, config.tol) {
        Ok(v) => v,
        Err(error) => {
            out.errors.extend(checks.into_iter().map(|check| CheckError { check, error: error.clone() }));
            return out;
        }
    };
    let mut record = |check: CheckName, r: Result<Certificate>| match r {
        Ok(c) => out.certificates.push(c),
        Err(error) => out.errors.push(CheckError { check, error }),
    };
    for check in checks {
        match check {
            CheckName::Nazarov => {
                for (t_set, omega) in &config.nazarov_sets {
                    record(check, verifier.nazarov(t_set, omega));
                }
            }
            CheckName::Hardy => {
                for &alpha in &config.alphas {
                    record(check, verifier.hardy(alpha));
                }
            }
            CheckName::Beurling => record(check, verifier.beurling(&config.windows)),
            CheckName::Pitt => {
                for &lambda in &config.lambdas {
                    let r = verifier.pitt(lambda).map(|mut c| {
                        c.informational = !config.schwartz;
                        c.with("schwartz", config.schwartz)
                    });
                    record(check, r);
                }
            }
            CheckName::Logarithmic => record(check, verifier.logarithmic()),
            CheckName::Entropic => record(check, verifier.entropic()),
            CheckName::Heisenberg => record(check, verifier.heisenberg()),
        }
    }
    out
}
