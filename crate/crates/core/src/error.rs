use thiserror::Error;

use crate::lie::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank {rank} is outside the supported range 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("rank mismatch: A{left} vs A{right}")]
    RankMismatch { left: usize, right: usize },

    #[error("expected {expected} coordinates, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {0} is not in P^e (neither dominant nor a simple reflection of a dominant weight)")]
    NotInEvenDomain(Weight),

    #[error("point is off the hyperplane sum(l) = 0 (coordinate sum {sum})")]
    OffHyperplane { sum: String },

    #[error("e-coordinates must be weakly decreasing")]
    Unsorted,

    #[error("reflection index {index} out of range 1..={max}")]
    ReflectionIndex { index: usize, max: usize },

    #[error("non-finite coordinate in point")]
    NonFinite,

    #[error("sum is not Weyl-invariant: {reason} at weight {weight}")]
    NotInvariant { weight: Weight, reason: &'static str },

    #[error("inexact division: irreducible remainder term at weight {0}")]
    InexactDivision(Weight),

    #[error("division by zero in the group ring")]
    DivisionByZero,

    #[error("invalid polynomial kind '{0}'")]
    UnknownKind(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("{name} {value} outside the supported range 1..={max}")]
    BoundOutOfRange { name: &'static str, value: i64, max: i64 },

    #[error("tolerance scale {0} must be positive and finite")]
    InvalidTolerance(f64),

    #[error("malformed JSON: {0}")]
    Json(String),
}
