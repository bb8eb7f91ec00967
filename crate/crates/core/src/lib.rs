//! Exact computational algebra for diagonal root-hyperplane ideals of Weyl
//! groups: Gröbner bases over ℚ, Weyl group actions on ℚ[t ⊕ t*],
//! diagonally alternating polynomials, symbolic powers, Dunkl operators and
//! the bipartition combinatorics of types B/C.

pub mod cells;
pub mod diagideals;
pub mod dunkl;
pub mod groebner;
pub mod linalg;
pub mod polyring;
pub mod rational;
pub mod verify;
pub mod weyl;

pub use rational::Rational;
