//! Exact-arithmetic engines for the algebra of truncated Kac-Moody groups:
//! root systems with multiplicities, Serre-quotient Lie algebras on Lyndon
//! bases, divided-power enveloping algebras with their bialgebra structure,
//! finite unipotent group quotients with lower-central and dimension series,
//! small-characteristic strip certificates and functorial maps between
//! unipotent completions.

pub mod error;
pub mod scalar;

pub mod freelie;
pub mod gcm;

pub use error::{EnvError, FunctorError, GcmError, GroupError, LieError, OracleError, RootsError, StripError};
pub use scalar::{Scalar, ScalarKind};
