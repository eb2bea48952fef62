use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation levels differ: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("element is not a unit (value at 1 is zero)")]
    NonUnit,
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error("cannot truncate level {from} to higher level {to}")]
    TruncateUpward { from: usize, to: usize },
    #[error("truncation level must be at least 1")]
    EmptyLevel,
    #[error("{0} has a prime factor with index above {1}")]
    PrimeIndexOutOfRange(u64, usize),
    #[error("{0} has no prime factor")]
    NoPrimeFactor(u64),
    #[error("level {0} is below the minimum of 2")]
    LevelTooSmall(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("denominator constant term cannot be normalized to 1")]
    NonMonicDenominator,
    #[error("denominator is not invertible as a power series in t")]
    NotExpandable,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
