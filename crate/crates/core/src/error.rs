use thiserror::Error;

use crate::spectra::Frac;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    NonPositive(&'static str),
    #[error("residue {0} is outside [0, 1)")]
    ResidueOutOfRange(Frac),
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("expected a class of arity {expected}, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("exponent matrix has rank {rank}, expected {rows}")]
    RankDeficient { rank: usize, rows: usize },
    #[error("exponent matrix column {0} is zero")]
    ZeroColumn(usize),
    #[error("malformed exponent matrix: {0}")]
    BadMatrix(String),
    #[error("theta does not solve M theta = e_{0}")]
    BadSolution(usize),
    #[error("collapse pair ({i}, {j}) out of range for arity {arity}")]
    PairOutOfRange { i: usize, j: usize, arity: usize },
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("cone dimension {0} exceeds the supported bound of 6")]
    DimensionTooLarge(usize),
    #[error("linear form has length {found}, cone has dimension {expected}")]
    FormLength { expected: usize, found: usize },
    #[error("positivity precondition violated: {0}")]
    NotPositive(String),
    #[error("threshold supremum has an empty domain")]
    EmptyThresholdDomain,
    #[error("{0}")]
    Datum(String),
    #[error("stratum {{{stratum}}}: {reason}")]
    Stratum { stratum: String, reason: String },
}
