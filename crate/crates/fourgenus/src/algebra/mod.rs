//! Exact arithmetic kernel: rationals, cyclotomic fields, Laurent
//! polynomials, and matrix reduction over `Z` and over `F[t^{±1}]` with
//! operation tracking.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here can be used from multiple threads without
//! synchronization.

mod cyclotomic;
mod field;
mod interval;
mod laurent;
mod laurent_mat;
mod matrix;
mod smith;
mod sturm;

pub use cyclotomic::{CycloField, CyclotomicNumber};
pub use field::{Field, Rationals};
pub use interval::{arccos_interval, cos_sin_of_turn, pi_interval, Interval};
pub use laurent::{resultant, LaurentPoly};
pub use laurent_mat::{
    diagonalize_laurent, laurent_identity, laurent_kernel, laurent_mat_mul, laurent_zero,
    submodule_membership, KernelBasis,
};
pub use matrix::{DiagonalizationResult, ElementaryOp, Matrix};
pub use smith::smith_normal_form_int;
pub use sturm::{count_roots, isolate_real_roots, sturm_sequence, to_dense, DensePoly, IsolatedRoot};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for the arbitrary-precision rationals used everywhere.
pub type Q = BigRational;
/// Shorthand for arbitrary-precision integers.
pub type Z = BigInt;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("conductor mismatch: expected {expected}, found {found}")]
    ConductorMismatch { expected: u64, found: u64 },
    #[error("coefficient vector has length {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("matrix dimensions {0}x{1} and {2}x{3} are incompatible")]
    Shape(usize, usize, usize, usize),
    #[error("conductor must be at least 1")]
    BadConductor,
}

/// Parses an exact rational from the string forms `n`, `n/d`.
pub fn parse_rational(s: &str) -> Result<Q, AlgebraError> {
    s.trim().parse::<Q>().map_err(|_| AlgebraError::DivisionByZero)
}

/// Renders a rational as `n` or `n/d`.
pub fn rational_string(q: &Q) -> String {
    q.to_string()
}
