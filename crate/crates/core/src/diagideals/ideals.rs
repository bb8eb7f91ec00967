use super::alternants::{AlternantBasis, AlternantBuilder};
use crate::groebner::{GroebnerError, Ideal};
use crate::polyring::Polynomial;
use crate::weyl::{RootSystem, WeylGroup};

/// `Δ = Π_{α∈Φ⁺} α` as a polynomial in the x-variables.
pub fn delta(rs: &RootSystem) -> Polynomial {
    let ring = rs.ring();
    rs.positive_roots()
        .iter()
        .fold(Polynomial::one(ring), |acc, a| &acc * &rs.root_form(ring, a))
}

/// `⟨α(x), α∨(y)⟩` for each positive root, with primitive integer forms.
pub fn pair_ideals(rs: &RootSystem) -> Vec<Ideal> {
    let ring = rs.ring();
    rs.positive_roots()
        .iter()
        .map(|a| Ideal::new(ring, [rs.root_form(ring, a), rs.coroot_form(ring, a)]).expect("same ring"))
        .collect()
}

/// `I = ⋂_{α∈Φ⁺} ⟨α, α∨⟩`.
pub fn ideal_i(rs: &RootSystem) -> Result<Ideal, GroebnerError> {
    Ideal::intersect_all(&pair_ideals(rs))
}

/// `I^(d) = ⋂_{α∈Φ⁺} ⟨α, α∨⟩^d`.
pub fn symbolic_power(rs: &RootSystem, d: u32) -> Result<Ideal, GroebnerError> {
    let powers = pair_ideals(rs)
        .iter()
        .map(|p| p.power(d))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::intersect_all(&powers)
}

/// The ideal generated by the alternants of total degree at most
/// `degree_bound`. Its graded pieces of degree `≤ degree_bound` are those
/// of the ideal generated by all alternants.
#[derive(Clone, Debug)]
pub struct AlternantIdeal {
    pub ideal: Ideal,
    pub degree_bound: u32,
    pub basis: AlternantBasis,
}

pub fn ideal_j(rs: &RootSystem, w: &WeylGroup, degree_bound: u32) -> Result<AlternantIdeal, GroebnerError> {
    let ring = rs.ring();
    let basis = AlternantBuilder::new(w, ring, degree_bound).up_to(degree_bound);
    let ideal = Ideal::new(ring, basis.up_to_degree(degree_bound))?;
    Ok(AlternantIdeal {
        ideal,
        degree_bound,
        basis,
    })
}
