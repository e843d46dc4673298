use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps [`Error::Usage`] to exit code 2 and every other variant to
/// exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied arguments outside an operation's domain.
    #[error("usage error: {0}")]
    Usage(String),

    /// Input is in range but degenerate for the criterion, e.g. `a ≡ ±1 (mod p)`.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A documented precondition does not hold, e.g. `gcd(n, a²−1) > 1`.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Malformed or out-of-range key-exchange message.
    #[error("protocol error: {0}")]
    Protocol(String),

    /// Input exceeds a configured size cap.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An internal cross-check between two independent computations disagreed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! usage {
    ($($arg:tt)*) => { $crate::error::Error::Usage(format!($($arg)*)) };
}

macro_rules! invariant {
    ($($arg:tt)*) => { $crate::error::Error::Invariant(format!($($arg)*)) };
}

pub(crate) use invariant;
pub(crate) use usage;
