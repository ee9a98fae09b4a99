use num_rational::BigRational;
use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions of different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("labels at different levels: {0} vs {1}")]
    LevelMismatch(usize, usize),

    #[error("invalid cell label: {0}")]
    InvalidLabel(String),

    #[error("invalid updown tableau: {0}")]
    InvalidTableau(String),

    #[error("node ({row},{col}) is not {expected} for shape {shape}")]
    WrongNode {
        row: usize,
        col: usize,
        expected: &'static str,
        shape: String,
    },

    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at {0}")]
    Pole(BigRational),

    #[error("polynomial does not split into linear factors over Q: {0}")]
    NonLinearFactor(String),

    #[error("not an integral polynomial in Z[d]: {0}")]
    NotIntegral(String),

    #[error("integer {0} is too large to factor by trial division")]
    Unfactorable(String),

    #[error("value too large to expand: {0}")]
    TooLarge(String),

    #[error("basis matrix is singular")]
    Singular,

    #[error("delta = {delta} is not a sanctioned evaluation point for n = {n}")]
    Unsanctioned { delta: BigRational, n: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
