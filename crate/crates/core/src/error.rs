//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("root order must be a positive integer")]
    InvalidOrder,

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("quon order k must be at least 2, got {0}")]
    OrderTooSmall(usize),

    #[error("half power mismatch: supplied scalar squared does not equal q")]
    HalfPowerMismatch,

    #[error("q-factorial [{n}]_q! vanishes at order k={k} (zero divisor)")]
    ZeroFactorial { n: usize, k: usize },

    #[error("structure function not representable: cumulative sum G_{s}({level}) = {value} < 0")]
    NotRepresentable { s: usize, level: usize, value: f64 },

    #[error("matrix is not Hermitian: ‖A − A†‖ = {residual:e} exceeds {tol:e}")]
    NonHermitian { residual: f64, tol: f64 },

    #[error("{0} is not prime; the construction is only claimed for prime dimension")]
    NotPrime(usize),

    #[error("eigenbasis index alpha={alpha} out of range 0..{max}")]
    AlphaOutOfRange { alpha: usize, max: usize },

    #[error("requested {levels} spectral levels but truncation admits only {max} interior levels")]
    LevelsExceedTruncation { levels: usize, max: usize },

    #[error("operation requires k = 2, got k = {0}")]
    RequiresKTwo(usize),

    #[error("candidate has {got} vectors, expected d² = {expected}")]
    WrongVectorCount { got: usize, expected: usize },

    #[error("{0}")]
    BadParameter(String),
}
