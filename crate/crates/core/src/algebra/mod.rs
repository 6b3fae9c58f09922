//! Exact arithmetic foundation: prime-power finite fields and their towers,
//! dense univariate and sparse multivariate polynomials, gcd / resultant /
//! squarefree / irreducibility primitives, and small exact linear algebra.

pub mod expr;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod num;
pub mod poly;
pub mod sparse;
pub mod tower;

use thiserror::Error;

/// Errors raised by the arithmetic foundation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("integer overflow past the 64-bit policy: {0}")]
    Overflow(String),
    #[error("zero input where a nonzero polynomial is required")]
    ZeroInput,
    #[error("constant input where a nonconstant polynomial is required")]
    ConstantInput,
    #[error("no irreducible polynomial found within the search budget (degree {0})")]
    NoIrreducible(usize),
    #[error("elements belong to different fields")]
    FieldMismatch,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
