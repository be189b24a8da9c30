use alloc::string::String;

/// Errors raised by the domain operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition {0}: parts must be weakly decreasing")]
    InvalidPartition(String),
    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),
    #[error("invalid composition {0}: parts must be positive")]
    InvalidComposition(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{n} letters exceeds the permutation bound {max}")]
    TooManyLetters { n: usize, max: usize },
    #[error("factor count mismatch: {left} vs {right}")]
    FactorCountMismatch { left: usize, right: usize },
    #[error("value kind mismatch: {0}")]
    KindMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("padding {r} is smaller than the required {needed}")]
    PaddingTooSmall { r: usize, needed: usize },
    #[error("determinant of size {r} exceeds the class expansion bound {max}")]
    ExpansionTooLarge { r: usize, max: usize },
    #[error("malformed index sets: {0}")]
    MalformedIndices(String),
    #[error("outside the stable range: 2*{length} > {m}")]
    StableRange { length: usize, m: usize },
    #[error("truncation degree {trunc} exceeds the bound {max}")]
    TruncationTooLarge { trunc: usize, max: usize },
    #[error("horizon {horizon} is too small, need at least {needed}")]
    HorizonTooSmall { horizon: usize, needed: usize },
    #[error("singular linear system")]
    Singular,
}

pub type Result<T> = core::result::Result<T, Error>;
