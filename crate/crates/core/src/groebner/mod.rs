//! Gröbner bases and ideal arithmetic over ℚ.

mod basis;
mod buchberger;
pub mod guard;
mod ideal;
mod report;

pub use basis::GroebnerBasis;
pub use buchberger::{buchberger, buchberger_with, BuchbergerOptions, BuchbergerStats, Selection};
pub use guard::ResourceLimits;
pub use ideal::{Ideal, IdealDocument};
pub use report::{GradedReport, GradedRow};

use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    /// A resource guard tripped; the computation was abandoned.
    #[error("resource limit reached: {0}")]
    ResourceLimit(String),
    #[error("operation requires a homogeneous ideal")]
    NotHomogeneous,
    #[error("operation requires a bihomogeneous ideal")]
    NotBihomogeneous,
    #[error("empty list of ideals")]
    Empty,
    #[error("invalid ideal document: {0}")]
    Document(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &crate::polyring::Polynomial, basis: &GroebnerBasis) -> crate::polyring::Polynomial {
    basis.normal_form(f)
}
