//! Error type shared across the crate.

use std::fmt;

use crate::scalar::ScalarKind;

/// Errors reported by scalar, polynomial, generator and correlator operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two scalars (or aggregates) of different kinds were combined.
    KindMismatch { left: ScalarKind, right: ScalarKind },
    /// Matrix/vector dimensions do not agree.
    SizeMismatch { left: usize, right: usize },
    /// Sequence sets with incompatible shapes (set size or length).
    ShapeMismatch { detail: String },
    /// An index or sample position is outside its valid range.
    OutOfRange {
        what: &'static str,
        value: i64,
        limit: i64,
    },
    /// A delay-plan permutation is not a bijection on {0..K-1}.
    InvalidPermutation { detail: String },
    /// A radix-M evaluation was requested for a non-standard delay plan.
    NotStandard,
    /// A polynomial with negative exponents was used where a causal
    /// (nonnegative-exponent) one is required.
    AnticausalInput { min_exponent: i64 },
    /// The diagonal of A*tilde(A) is non-constant or has unequal entries.
    NonConstantDiagonal,
    /// A phase factor in an equivalence transform is not unit magnitude.
    NonUnitPhase { index: usize },
    /// A generator stage matrix has polynomial (non-constant) entries.
    NotConstantMatrix { stage: usize },
    /// A generator stage matrix failed the paraunitarity check.
    NotParaunitary { stage: usize },
    /// A named catalog entry does not exist or is missing a size argument.
    UnknownCatalogEntry { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::KindMismatch { left, right } => {
                write!(f, "scalar kind mismatch: {left} vs {right}")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::ShapeMismatch { detail } => write!(f, "shape mismatch: {detail}"),
            Error::OutOfRange { what, value, limit } => {
                write!(f, "{what} = {value} out of range (limit {limit})")
            }
            Error::InvalidPermutation { detail } => {
                write!(f, "invalid permutation: {detail}")
            }
            Error::NotStandard => {
                write!(f, "operation requires a standard delay plan")
            }
            Error::AnticausalInput { min_exponent } => {
                write!(
                    f,
                    "anticausal input: minimum exponent {min_exponent} is negative"
                )
            }
            Error::NonConstantDiagonal => {
                write!(f, "diagonal of A*tilde(A) is non-constant or unequal")
            }
            Error::NonUnitPhase { index } => {
                write!(f, "phase factor {index} is not unit magnitude")
            }
            Error::NotConstantMatrix { stage } => {
                write!(f, "stage {stage} matrix has non-constant entries")
            }
            Error::NotParaunitary { stage } => {
                write!(f, "stage {stage} matrix is not paraunitary")
            }
            Error::UnknownCatalogEntry { name } => {
                write!(f, "unknown catalog entry: {name}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
