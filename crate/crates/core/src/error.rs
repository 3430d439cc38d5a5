//! Error types, one enum per engine.

use thiserror::Error;

/// Errors raised while validating or classifying generalised Cartan matrices.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcmError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry at ({i},{i}) is not 2")]
    DiagonalNotTwo { i: usize },
    #[error("positive off-diagonal entry at ({i},{j})")]
    PositiveOffDiagonal { i: usize, j: usize },
    #[error("asymmetric zero at ({i},{j})")]
    AsymmetricZero { i: usize, j: usize },
    #[error("matrix is decomposable")]
    DecomposableMatrix,
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("embedding is not injective or out of range")]
    BadEmbedding,
    #[error("label set does not match matrix size")]
    BadLabels,
}

/// Errors raised by root-lattice and root-table operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootsError {
    #[error("{0:?} is not a real root of the table")]
    NotRealRoot(Vec<i64>),
    #[error("{0:?} is not listed in the root table")]
    UnknownRoot(Vec<i64>),
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("set is not closed")]
    NotClosed,
}

/// Errors raised by the graded Lie algebra engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("result of height {height} exceeds the band bound {bound}")]
    BandOverflow { height: i64, bound: i64 },
    #[error("divided power is not integral on the working lattice: {detail}")]
    NonIntegralDividedPower { detail: String },
    #[error("scalar does not embed in the context kind: {value}")]
    NonIntegralScalar { value: String },
    #[error("{0:?} is not an imaginary root degree")]
    NotImaginary(Vec<i64>),
    #[error("{0:?} is not a real root within the band")]
    NotRealRoot(Vec<i64>),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("degree {0:?} lies outside Q+")]
    NotPositiveDegree(Vec<i64>),
    #[error(transparent)]
    Gcm(#[from] GcmError),
}

/// Errors raised by the truncated enveloping algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnvError {
    #[error("characteristic {p} is not 0 and not greater than the height bound {bound}")]
    CharConstraint { p: u64, bound: i64 },
    #[error("element is not group-like")]
    NotGroupLike,
    #[error("element support meets the excluded degree {0:?}")]
    UnsupportedDegree(Vec<i64>),
    #[error("set of roots is not closed")]
    NotClosed,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Errors raised by the finite unipotent quotient engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("projected subgroup order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: String, cap: u64 },
    #[error("pair is not prenilpotent: {0}")]
    NotPrenilpotent(String),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Errors raised by the strip algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StripError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("element is not group-like in the strip quotient")]
    NotGroupLike,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Errors raised by functorial map construction and application.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctorError {
    #[error("target is not entrywise dominated by source (not comparable)")]
    NotComparable,
    #[error("difference of roots {0:?} and {1:?} is a root")]
    DifferenceIsRoot(Vec<i64>, Vec<i64>),
    #[error("pairing matrix is not a GCM: {0}")]
    NotGcm(String),
    #[error("roots are not linearly independent")]
    NotIndependent,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Env(#[from] EnvError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error(transparent)]
    Gcm(#[from] GcmError),
}

/// Errors raised by the brute-force oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("census size {size} exceeds the cap {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error(transparent)]
    Env(#[from] EnvError),
}
