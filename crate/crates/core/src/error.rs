use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension d = {0} is below 3")]
    DimensionTooSmall(i64),
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("first entry must be 1, got {0}")]
    LeadingEntryNotOne(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix must have at least one row and column and {expected} entries, got {rows}x{cols} with {found}")]
    BadMatrixShape {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },
    #[error("value must be positive, got {0}")]
    NonPositive(String),
    #[error("value must be nonnegative, got {0}")]
    Negative(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("vertex parameter n = {n} is too small for {family} in dimension {d} (need n >= {min})")]
    FamilyTooSmall {
        family: &'static str,
        n: u64,
        d: usize,
        min: u64,
    },
    #[error("no crossing index t makes the g-vector difference nonnegative then nonpositive")]
    NoCrossing,
    #[error("f_{r} value {value} is below the {floor_name} value {floor}")]
    BelowFloor {
        r: usize,
        value: String,
        floor_name: &'static str,
        floor: String,
    },
    #[error("path pair is not in the domain of phi: {0}")]
    NotInPhiDomain(String),
    #[error("certified comparison produced a failing bound at s = {s}")]
    CertifiedBoundFailed { s: usize },
}
