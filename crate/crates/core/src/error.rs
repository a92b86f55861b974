use thiserror::Error;

/// Everything that can go wrong inside the library.
///
/// The CLI maps [`Error::is_numeric_domain`] errors to exit code 4 and I/O
/// failures to exit code 3.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("symplectic constraint violated: ad - bc = {det} (must equal 1 within {tol:e})")]
    SymplecticViolation { det: f64, tol: f64 },
    #[error("parameter b = {0} is negative; only b >= 0 is supported")]
    NegativeB(f64),
    #[error("operation requires b > 0, got b = {0}")]
    RequiresPositiveB(f64),
    #[error("operation requires b = 0, got b = {0}")]
    RequiresZeroB(f64),
    #[error("degenerate parameters: d = 0 on the b = 0 branch")]
    DegenerateParams,
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("fast transform needs a power-of-two sample count, got {0}")]
    GridNotPow2(usize),
    #[error("length mismatch: grid has {expected} samples, got {got} values")]
    LengthMismatch { expected: usize, got: usize },
    #[error("argument {0} outside the domain x > 0")]
    DomainError(f64),
    #[error("lambda = {0} outside [0, 1)")]
    LambdaOutOfRange(f64),
    #[error("signal has zero energy")]
    ZeroSignal,
    #[error("grid contains the coordinate 0 (sample {index}); singular weight undefined")]
    GridContainsZero { index: usize },
    #[error("signal is not unit-norm: ||f||_2 = {norm}")]
    NotNormalized { norm: f64 },
    #[error("numeric overflow in {0}")]
    Overflow(&'static str),
    #[error("bad signal spec: {0}")]
    BadSpec(String),
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn is_numeric_domain(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Format(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
