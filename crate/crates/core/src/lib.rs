//! Offset linear canonical transform (OLCT) engines and numerical
//! certificates for the uncertainty principles attached to it.
//!
//! ```
//! use olct::{generate, run_suite, OlctParams, SignalKind, SignalSpec, SuiteConfig};
//!
//! let f = generate(&SignalSpec::new(SignalKind::unit_gaussian(), olct::default_grid())).unwrap();
//! let out = run_suite(&f, &OlctParams::fourier(), &SuiteConfig::default());
//! assert!(out.pass());
//! ```

pub mod error;
pub mod grid;
pub mod io;
pub mod measures;
pub mod params;
pub mod signals;
pub mod special;
pub mod transform;
pub mod up;

pub use error::{Error, Result};
pub use grid::{Density, Grid, SampledSignal};
pub use measures::IntervalSet;
pub use params::OlctParams;
pub use signals::{battery, default_grid, generate, SignalKind, SignalSpec};
pub use special::{digamma, gamma, pitt_constant, PittConstant};
pub use transform::{inverse_transform, transform, transform_direct, transform_fast, Method};
pub use up::{run_suite, Certificate, CheckName, SuiteConfig, SuiteOutcome, Verifier};
