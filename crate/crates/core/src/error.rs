use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AdoError {
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),

    #[error("unsupported level {0}: the colour must be at least 2")]
    UnsupportedLevel(u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("t-exponent mismatch in addition: {0} vs {1}")]
    TExponentMismatch(i64, i64),

    #[error("denominator vanishes under specialization (lambda is not generic)")]
    DegenerateSpecialization,

    #[error("vector is not in the span of the highest weight basis")]
    NotInHighestWeightSpace,

    #[error("partition {0:?} not found in basis")]
    PartitionNotFound(Vec<u32>),

    #[error("tensor position {position} out of range for {factors} factors")]
    PositionOutOfRange { position: usize, factors: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: i32, strands: usize },

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("braid closure has {0} components; a knot is required")]
    NotAKnot(usize),

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed serialized value: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, AdoError>;
