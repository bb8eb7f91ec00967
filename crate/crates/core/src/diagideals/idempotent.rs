use std::collections::HashMap;

use crate::polyring::{Monomial, PolyError, Polynomial};
use crate::rational::Rational;
use crate::weyl::WeylGroup;

/// The two idempotents of the group algebra used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Idempotent {
    /// `e = |W|⁻¹ Σ w`
    Symmetrizer,
    /// `e₋ = |W|⁻¹ Σ sign(w)·w`
    Antisymmetrizer,
}

impl Idempotent {
    pub fn name(&self) -> &'static str {
        match self {
            Idempotent::Symmetrizer => "e",
            Idempotent::Antisymmetrizer => "e_-",
        }
    }

    pub fn apply(&self, f: &Polynomial, w: &WeylGroup) -> Result<Polynomial, PolyError> {
        average(f, w, *self == Idempotent::Antisymmetrizer)
    }
}

fn average(f: &Polynomial, w: &WeylGroup, signed: bool) -> Result<Polynomial, PolyError> {
    let mut acc: HashMap<Monomial, Rational> = HashMap::new();
    for k in 0..w.order() {
        let img = w.act(k, f)?;
        let neg = signed && w.sign(k) < 0;
        for t in img.into_terms() {
            let e = acc.entry(t.mono).or_insert(Rational::ZERO);
            *e = if neg { &*e - &t.coeff } else { &*e + &t.coeff };
        }
    }
    let scale = Rational::new(1, w.order() as i64);
    Ok(Polynomial::from_terms(f.ring(), acc.into_iter().map(|(m, c)| (m, &c * &scale))))
}

/// Reynolds operator `e`.
pub fn reynolds(f: &Polynomial, w: &WeylGroup) -> Result<Polynomial, PolyError> {
    average(f, w, false)
}

/// Antisymmetrizer `e₋`, with the sign taken as the determinant.
pub fn antisymmetrize(f: &Polynomial, w: &WeylGroup) -> Result<Polynomial, PolyError> {
    average(f, w, true)
}
