use std::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug)]
pub enum Error {
    /// Division by zero in `Z[i]`.
    DivisionByZero,
    /// `gcd(0, 0)` requested.
    GcdOfZeros,
    /// An operation requiring a nonzero element received zero.
    ZeroInput(&'static str),
    /// An operation requiring an odd element (norm coprime to 2) received an
    /// even one.
    EvenElement(String),
    /// A symbol or sum was requested for a modulus outside its domain
    /// (even, non-primary, unit, ...).
    InvalidModulus(String),
    /// `tau` requires a generator with no rational prime divisor.
    RationalPrimeDivisor(String),
    /// Reciprocity requires coprime arguments.
    NotCoprime(String),
    /// The Dirichlet-group oracle does not model this conductor
    /// (powers of 2 beyond 4).
    UnsupportedConductor(u64),
    /// Adaptive quadrature failed to reach the requested tolerance.
    QuadratureNotConverged { achieved: f64, requested: f64 },
    /// The Poisson-identity dual sum did not pass its truncation test
    /// within the norm cap.
    TruncationNotConverged { norm_cap: u64, detail: String },
    /// Power iteration hit its iteration cap before stagnating.
    PowerIterationNotConverged { iterations: usize, last: f64 },
    /// A precondition documented on the operation was violated.
    Precondition(String),
    /// Malformed textual input (Gaussian-integer literal, CSV row, ...).
    Parse(String),
    /// Report persistence failed.
    Io(std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero in Z[i]"),
            Error::GcdOfZeros => write!(f, "gcd(0, 0) is undefined"),
            Error::ZeroInput(op) => write!(f, "{op}: zero input"),
            Error::EvenElement(m) => write!(f, "even element: {m}"),
            Error::InvalidModulus(m) => write!(f, "invalid modulus: {m}"),
            Error::RationalPrimeDivisor(m) => {
                write!(f, "generator has a rational prime divisor: {m}")
            }
            Error::NotCoprime(m) => write!(f, "arguments not coprime: {m}"),
            Error::UnsupportedConductor(q) => {
                write!(f, "conductor {q} unsupported: 2-part exceeds 4")
            }
            Error::QuadratureNotConverged { achieved, requested } => write!(
                f,
                "quadrature not converged: achieved {achieved:e}, requested {requested:e}"
            ),
            Error::TruncationNotConverged { norm_cap, detail } => {
                write!(f, "dual-sum truncation not converged below norm {norm_cap}: {detail}")
            }
            Error::PowerIterationNotConverged { iterations, last } => {
                write!(f, "power iteration not converged after {iterations} steps (last {last:e})")
            }
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
