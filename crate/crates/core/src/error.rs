use thiserror::Error;

/// Every failure the engine can report. [`Error::code`] gives the stable
/// machine-readable name used in CLI error objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must satisfy q != 0 and q^2 != 1 (got q = {0})")]
    DegenerateQ(String),
    #[error("non-generic parameters: a_k - a_(k-j) vanishes at k = {k}, j = {j}")]
    NonGenericQ { k: u32, j: u32 },
    #[error("braided Casimir did not reduce to a scalar: {0}")]
    NotScalar(String),
    #[error("q-difference base must not be 0 or 1 (got {0})")]
    DegenerateBase(String),
    #[error("the roots x1, x2 coincide (zero discriminant); use the moment recurrence")]
    ConfluentRoots,
    #[error("series requires |q| < 1 (got q = {0})")]
    NonConvergent(String),
    #[error("{0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateQ(_) => "DegenerateQ",
            Error::NonGenericQ { .. } => "NonGenericQ",
            Error::NotScalar(_) => "NotScalar",
            Error::DegenerateBase(_) => "DegenerateBase",
            Error::ConfluentRoots => "ConfluentRoots",
            Error::NonConvergent(_) => "NonConvergent",
            Error::Parse(_) => "Parse",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
