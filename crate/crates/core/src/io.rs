//! On-disk formats: JSON signal files, JSON verification reports, and CSV
//! plot data.
//!
//! Floats are written in the shortest decimal form that parses back to the
//! same `f64`, so a write/read cycle is bit-exact. Complex samples are
//! two-element arrays `[re, im]`.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::grid::{Grid, SampledSignal};
use crate::params::OlctParams;
use crate::signals::{SignalKind, SignalSpec, UNIT_GAUSSIAN_ALPHA};
use crate::up::{CheckError, CheckName, Certificate, SuiteOutcome};

pub const SIGNAL_FORMAT_VERSION: u32 = 1;
pub const REPORT_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalFile {
    pub version: u32,
    pub grid: Grid,
    pub values: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, Value>,
}

impl SignalFile {
    pub fn from_signal(s: &SampledSignal, metadata: BTreeMap<String, Value>) -> Self {
        Self {
            version: SIGNAL_FORMAT_VERSION,
            grid: *s.grid(),
            values: s.values().iter().map(|z| [z.re, z.im]).collect(),
            metadata,
        }
    }

    pub fn to_signal(&self) -> Result<SampledSignal> {
        if self.version != SIGNAL_FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported signal file version {}", self.version)));
        }
        let grid = Grid::new(self.grid.offset, self.grid.step, self.grid.count)
            .map_err(|e| Error::Format(e.to_string()))?;
        let values = self.values.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        SampledSignal::new(grid, values).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        read_json(path)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_json(path, self)
    }
}

/// Identifies the signal a run was made on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalEcho {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<SignalSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    pub grid: Grid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub check: CheckName,
    pub message: String,
    pub numeric_domain: bool,
}

impl From<&CheckError> for ErrorRecord {
    fn from(e: &CheckError) -> Self {
        Self { check: e.check, message: e.error.to_string(), numeric_domain: e.error.is_numeric_domain() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalReport {
    pub signal: SignalEcho,
    pub certificates: Vec<Certificate>,
    pub errors: Vec<ErrorRecord>,
    pub pass: bool,
}

impl SignalReport {
    pub fn new(signal: SignalEcho, outcome: &SuiteOutcome) -> Self {
        Self {
            signal,
            certificates: outcome.certificates.clone(),
            errors: outcome.errors.iter().map(ErrorRecord::from).collect(),
            pass: outcome.pass(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: u32,
    pub params: OlctParams,
    pub runs: Vec<SignalReport>,
    /// True iff no run has an error or a failed non-informational
    /// certificate.
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl ReportFile {
    pub fn new(params: OlctParams, runs: Vec<SignalReport>) -> Self {
        let pass = runs.iter().all(|r| r.pass);
        Self { version: REPORT_FORMAT_VERSION, params, runs, pass, timestamp: None }
    }

    pub fn stamped(mut self) -> Self {
        self.timestamp = Some(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
        self
    }

    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.runs.iter().flat_map(|r| r.certificates.iter())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let r: Self = read_json(path)?;
        if r.version != REPORT_FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported report version {}", r.version)));
        }
        Ok(r)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_json(path, self)
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_reader(BufReader::new(file))
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Error::Format(e.to_string()))?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// What an input file to `export-plotdata` turned out to be.
#[derive(Debug, Clone, PartialEq)]
pub enum PlotSource {
    Signal(SampledSignal),
    Report(ReportFile),
}

pub fn read_plot_source(path: &Path) -> Result<PlotSource> {
    let v: Value = read_json(path)?;
    let is_report = v.get("runs").is_some();
    let bad = |e: serde_json::Error| Error::Format(format!("{}: {e}", path.display()));
    if is_report {
        Ok(PlotSource::Report(serde_json::from_value(v).map_err(bad)?))
    } else {
        let f: SignalFile = serde_json::from_value(v).map_err(bad)?;
        Ok(PlotSource::Signal(f.to_signal()?))
    }
}

/// Columns `coordinate,re,im,modulus`, one row per sample.
pub fn write_signal_csv<W: Write>(out: W, s: &SampledSignal) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["coordinate", "re", "im", "modulus"]).map_err(csv_err)?;
    for (x, z) in s.grid().coords().zip(s.values()) {
        w.serialize((x, z.re, z.im, z.norm())).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `lambda,lhs,rhs`, one row per Pitt certificate.
pub fn write_pitt_csv<W: Write>(out: W, report: &ReportFile) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["lambda", "lhs", "rhs"]).map_err(csv_err)?;
    for c in report.certificates().filter(|c| c.name == CheckName::Pitt) {
        let lambda = c.meta_num("lambda").unwrap_or(f64::NAN);
        w.serialize((lambda, c.lhs, c.rhs)).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Parse a generator selector such as `gaussian`, `gaussian,sigma=2`,
/// `hermite,order=3`, `hermite2`, `rect,width=1`, `noise,seed=7` or
/// `extremal,alpha=0.3`. The extremal takes its chirp from `params`.
pub fn parse_signal_kind(s: &str, params: &OlctParams) -> Result<SignalKind> {
    let mut parts = s.split(',').map(str::trim);
    let name = parts.next().unwrap_or_default();
    let mut kv = BTreeMap::new();
    for p in parts {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::BadSpec(format!("expected key=value, got `{p}`")))?;
        kv.insert(k.trim().to_owned(), v.trim().to_owned());
    }
    let num = |key: &str, default: f64| -> Result<f64> {
        kv.get(key).map_or(Ok(default), |v| {
            v.parse().map_err(|_| Error::BadSpec(format!("{key}: cannot parse `{v}`")))
        })
    };
    let int = |key: &str, default: u64| -> Result<u64> {
        kv.get(key).map_or(Ok(default), |v| {
            v.parse().map_err(|_| Error::BadSpec(format!("{key}: cannot parse `{v}`")))
        })
    };
    let kind = match name {
        "gaussian" => SignalKind::Gaussian { sigma: num("sigma", 1.0)? },
        "extremal" => SignalKind::ChirpedGaussianExtremal {
            params: *params,
            alpha: num("alpha", UNIT_GAUSSIAN_ALPHA)?,
        },
        "hermite" => SignalKind::Hermite { order: int("order", 1)? as usize },
        "rect" => SignalKind::Rect { width: num("width", 1.0)? },
        "noise" => SignalKind::BandlimitedNoise {
            seed: int("seed", crate::signals::DEFAULT_NOISE_SEED)?,
            bins: int("bins", 8)? as usize,
            envelope: num("envelope", 2.0)?,
        },
        other => match other.strip_prefix("hermite").and_then(|n| n.parse().ok()) {
            Some(order) => SignalKind::Hermite { order },
            None => return Err(Error::BadSpec(format!("unknown signal `{other}`"))),
        },
    };
    Ok(kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signals::{default_grid, generate};

    #[test]
    fn signal_file_round_trip_is_bit_exact() {
        let s = generate(&SignalSpec::new(SignalKind::noise(3), default_grid())).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        SignalFile::from_signal(&s, BTreeMap::new()).write(&path).unwrap();
        let back = SignalFile::read(&path).unwrap().to_signal().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn signal_file_rejects_bad_version_and_length() {
        let s = SampledSignal::zeros(Grid::new(0.0, 1.0, 2).unwrap());
        let mut f = SignalFile::from_signal(&s, BTreeMap::new());
        f.version = 9;
        assert!(matches!(f.to_signal(), Err(Error::Format(_))));
        f.version = SIGNAL_FORMAT_VERSION;
        f.values.pop();
        assert!(matches!(f.to_signal(), Err(Error::Format(_))));
    }

    #[test]
    fn missing_file_is_io_error() {
        let e = SignalFile::read(Path::new("/nonexistent/x.json")).unwrap_err();
        assert!(matches!(e, Error::Io(_)));
        assert!(!e.is_numeric_domain());
    }

    #[test]
    fn signal_selectors() {
        let p = OlctParams::fourier();
        assert_eq!(parse_signal_kind("gaussian", &p).unwrap(), SignalKind::unit_gaussian());
        assert_eq!(parse_signal_kind("hermite2", &p).unwrap(), SignalKind::Hermite { order: 2 });
        assert_eq!(parse_signal_kind("hermite,order=3", &p).unwrap(), SignalKind::Hermite { order: 3 });
        assert_eq!(parse_signal_kind("rect, width=2", &p).unwrap(), SignalKind::Rect { width: 2.0 });
        assert_eq!(parse_signal_kind("noise,seed=7", &p).unwrap(), SignalKind::noise(7));
        assert!(parse_signal_kind("sawtooth", &p).is_err());
        assert!(parse_signal_kind("gaussian,sigma", &p).is_err());
        assert!(parse_signal_kind("gaussian,sigma=x", &p).is_err());
    }

    #[test]
    fn csv_shapes() {
        let s = generate(&SignalSpec::new(SignalKind::unit_gaussian(), default_grid())).unwrap();
        let mut buf = Vec::new();
        write_signal_csv(&mut buf, &s).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + s.len());
        assert!(text.starts_with("coordinate,re,im,modulus\n"));
    }
}
