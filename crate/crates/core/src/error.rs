use thiserror::Error;

use crate::field::FieldDesc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldDesc, right: FieldDesc },

    #[error("variable count mismatch: expected {expected}, got {got}")]
    VarCountMismatch { expected: usize, got: usize },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("substituent {index} is not a linear form (degree {degree})")]
    NonLinearSubstituent { index: usize, degree: usize },

    #[error("denominator {denominator} is divisible by {p}")]
    DenominatorDivisibleByP { denominator: String, p: u64 },

    #[error("characteristic {characteristic} does not exceed degree {degree}")]
    CharacteristicTooSmall { characteristic: u64, degree: usize },

    #[error("operator degree {operator} exceeds form degree {form}")]
    OperatorDegreeTooHigh { operator: usize, form: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("graded piece of degree {degree} is not available (module stored up to {top})")]
    MissingPiece { degree: usize, top: usize },

    #[error("Betti table shape mismatch: {0}")]
    BettiShape(String),

    #[error("degenerate line: the two points are proportional")]
    DegenerateLine,

    #[error("line inside drop locus: rank {rank} <= threshold {threshold} at sampled parameters")]
    LineInsideLocus { rank: usize, threshold: usize },

    #[error("gcd of minors did not stabilize after {rounds} rounds")]
    GcdNotStabilized { rounds: usize },

    #[error("no curve of the requested degree passes through the sampled drop points")]
    NoCurve,

    #[error("undersampled: the interpolation system has corank {corank}")]
    Undersampled { corank: usize },

    #[error("point is not on the curve")]
    NotOnCurve,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown field descriptor {0:?}")]
    UnknownField(String),

    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
