//! Dunkl operators of the rational Cherednik algebra with a constant
//! parameter, acting on `ℚ[x]`, and the rank-one word algebra.

mod operator;
mod rank_one;
mod suite;

pub use operator::{
    check_commutativity, check_defining_relation, commutativity_witness, defining_relation_sides,
    defining_relation_witness, dunkl_apply, DunklContext, DunklOperator,
};
pub use rank_one::{chain_word, evaluate_word, rank_one_symbol_checks, Letter, RankOneOperator, SymbolCheck};
pub use suite::{random_x_polynomial, run_suite, PropertyResult};

use crate::polyring::PolyError;
use crate::weyl::{RootSystem, WeylError};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DunklError {
    #[error("Dunkl direction must be nonzero")]
    ZeroDirection,
    #[error("direction has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial involves y-variables")]
    NotInXVariables,
    #[error("expected a linear form in the x-variables")]
    NotLinear,
    #[error("polynomial belongs to another ring")]
    RingMismatch,
    #[error("divided difference is not a polynomial")]
    DivisionFailure,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// The rank-one system: one positive root `α = x1` with `(α, α) = 1`, so
/// that `s x1 = −x1` and `D_y = ∂ − (c/x)(1 − s)` for `y = 1`.
pub fn rank_one_system() -> RootSystem {
    RootSystem::from_simple_roots("A1-rank-one", vec![vec![Rational::ONE]], None).expect("valid rank-one data")
}

/// The parameter values exercised by default.
pub fn default_parameters() -> Vec<Rational> {
    vec![Rational::ZERO, Rational::new(1, 2), Rational::ONE, Rational::new(3, 7)]
}
