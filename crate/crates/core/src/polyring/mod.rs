//! Exact multivariate polynomials over ℚ in the variables
//! `x1..xn, y1..yn` (coordinates on t and t*), plus optional auxiliary
//! variables used internally for elimination.

mod monomial;
mod ops;
mod parse;
mod polynomial;

pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use ops::{apply_linear_change, exact_divide_linear, partial_derivative, LinearChange};
pub use polynomial::{Polynomial, Ring, Term};
pub(crate) use polynomial::merge_sub;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("divisor is not a nonzero linear polynomial")]
    NotLinear,
    #[error("polynomial is not divisible by the linear form")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}
