use thiserror::Error;

/// Errors raised by the library.
///
/// `InvalidArgument` covers caller mistakes (bad degree, unreduced pair, bad
/// modulus). `Invariant` means an exact identity that must hold did not; it
/// is always a bug or a genuine counterexample and is never swallowed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid admissible pair: {0}")]
    InvalidPair(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("Noether-Lefschetz coefficient for discriminant {0} is outside the known expansion (1..=20)")]
    OutOfTable(i64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("determinant vanished at {0} consecutive random samples")]
    DegenerateSample(u32),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
