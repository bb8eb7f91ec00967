use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::buchberger::{buchberger, buchberger_with, BuchbergerOptions};
use super::report::{GradedReport, GradedRow};
use super::{GroebnerBasis, GroebnerError};
use crate::polyring::{MonomialOrder, PolyError, Polynomial, Ring};

/// An ideal given by generators, with reduced Gröbner bases cached per
/// monomial order.
///
/// Ideals are immutable; the cache only ever gains information (a complete
/// basis, or a truncated one with a higher bound), so concurrent readers
/// may recompute but always publish identical results.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().map(|c| c.clone()).unwrap_or_default();
        Self {
            ring: self.ring,
            generators: self.generators.clone(),
            homogeneous: self.homogeneous,
            cache: Mutex::new(cache),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "Ideal<{}>", gens.join(", "))
    }
}

/// JSON form of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDocument {
    pub variables: Vec<String>,
    pub order: String,
    pub generators: Vec<String>,
}

impl Ideal {
    /// Zero generators are dropped; the rest are normalised to primitive
    /// integer form and deduplicated, keeping first occurrences.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self, GroebnerError> {
        let mut generators: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.ring().with_order(ring.order()) != ring {
                return Err(PolyError::RingMismatch.into());
            }
            if g.is_zero() {
                continue;
            }
            let g = g.with_order(ring.order()).primitive();
            if !generators.contains(&g) {
                generators.push(g);
            }
        }
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Self {
            ring,
            generators,
            homogeneous,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(ring, []).expect("empty generator list")
    }

    pub fn unit(ring: Ring) -> Self {
        Self::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// Parses each generator with the polynomial grammar.
    pub fn parse(ring: Ring, gens: &[&str]) -> Result<Self, GroebnerError> {
        let polys = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.bidegree().is_some())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    fn max_generator_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    fn cached(&self, order: MonomialOrder) -> Option<Arc<GroebnerBasis>> {
        self.cache.lock().ok()?.get(&order).cloned()
    }

    fn publish(&self, order: MonomialOrder, gb: GroebnerBasis) -> Arc<GroebnerBasis> {
        let gb = Arc::new(gb);
        if let Ok(mut cache) = self.cache.lock() {
            let better = match cache.get(&order) {
                None => true,
                Some(old) if old.is_complete() => false,
                Some(old) => gb.is_complete() || gb.degree_bound() > old.degree_bound(),
            };
            if better {
                cache.insert(order, gb.clone());
            } else {
                return cache[&order].clone();
            }
        }
        gb
    }

    /// Complete reduced Gröbner basis in the ring's order.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        self.groebner_in(self.ring.order())
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        if let Some(gb) = self.cached(order).filter(|g| g.is_complete()) {
            return Ok(gb);
        }
        let ring = self.ring.with_order(order);
        let gb = buchberger(ring, &self.generators)?;
        Ok(self.publish(order, gb))
    }

    /// A basis exact through degree `d`: truncated for homogeneous ideals,
    /// complete otherwise.
    pub fn groebner_through(&self, d: u32) -> Result<Arc<GroebnerBasis>, GroebnerError> {
        let order = self.ring.order();
        if !self.homogeneous {
            return self.groebner_in(order);
        }
        if let Some(gb) = self.cached(order).filter(|g| g.valid_through(d)) {
            return Ok(gb);
        }
        let opts = BuchbergerOptions { degree_bound: Some(d), ..Default::default() };
        let (gb, _) = buchberger_with(self.ring, &self.generators, opts)?;
        Ok(self.publish(order, gb))
    }

    /// Installs a basis computed elsewhere, e.g. as a by-product of an
    /// elimination. The caller guarantees it is a reduced basis of `self`.
    pub(crate) fn prime_cache(&self, gb: GroebnerBasis) {
        self.publish(gb.order(), gb);
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        let d = f.degree().unwrap_or(0);
        Ok(self.groebner_through(d)?.normal_form(f))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        if f.ring().with_order(self.ring.order()) != self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        if f.is_zero() {
            return Ok(true);
        }
        let d = f.degree().unwrap_or(0);
        Ok(self.groebner_through(d)?.reduces_to_zero(f))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        self.check_ring(other)?;
        let d = other.max_generator_degree();
        if self.homogeneous {
            self.groebner_through(d)?;
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership of generators.
    pub fn equals(&self, other: &Ideal) -> Result<bool, GroebnerError> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    fn check_ring(&self, other: &Ideal) -> Result<(), GroebnerError> {
        if self.ring.with_order(other.ring.order()) != other.ring {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        self.check_ring(other)?;
        Ideal::new(self.ring, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        self.check_ring(other)?;
        let other_gens: Vec<Polynomial> = other.generators.iter().map(|g| g.with_order(self.ring.order())).collect();
        let mut gens = Vec::with_capacity(self.generators.len() * other_gens.len());
        for a in &self.generators {
            for b in &other_gens {
                gens.push(a * b);
            }
        }
        Ideal::new(self.ring, gens)
    }

    /// `self^d`, generated by all `d`-fold products of generators.
    pub fn power(&self, d: u32) -> Result<Ideal, GroebnerError> {
        if d == 0 {
            return Ok(Ideal::unit(self.ring));
        }
        let n = self.generators.len();
        let mut gens = Vec::new();
        // multisets of generator indices, as non-decreasing sequences
        let mut idx = vec![0usize; d as usize];
        if n == 0 {
            return Ok(Ideal::zero(self.ring));
        }
        loop {
            let mut prod = self.generators[idx[0]].clone();
            for &i in &idx[1..] {
                prod = &prod * &self.generators[i];
            }
            gens.push(prod);
            let Some(k) = (0..idx.len()).rev().find(|&k| idx[k] + 1 < n) else {
                break;
            };
            let v = idx[k] + 1;
            for slot in &mut idx[k..] {
                *slot = v;
            }
        }
        Ideal::new(self.ring, gens)
    }

    /// `self ∩ k[remaining variables]`, where `mask` selects the variables
    /// to eliminate. The result lives in the same ring.
    pub fn eliminate(&self, mask: u32) -> Result<Ideal, GroebnerError> {
        if mask == 0 {
            return Ok(self.clone());
        }
        let gb = self.groebner_in(MonomialOrder::BlockElim { eliminated: mask })?;
        let kept = gb
            .polys()
            .iter()
            .filter(|g| !g.involves(mask))
            .map(|g| g.with_order(self.ring.order()));
        Ideal::new(self.ring, kept)
    }

    /// `self ∩ other` via `t·self + (1 − t)·other` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, GroebnerError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.ring));
        }
        if self.generators.iter().any(Polynomial::is_constant) {
            return Ideal::new(self.ring, other.generators.iter().cloned());
        }
        if other.generators.iter().any(Polynomial::is_constant) {
            return Ok(self.clone());
        }
        let t = self.ring.nvars();
        let tmask = 1u32 << t;
        let big = self
            .ring
            .with_extra_vars(self.ring.extra() + 1)
            .with_order(MonomialOrder::BlockElim { eliminated: tmask });
        let tv = Polynomial::var(big, t);
        let one_minus_t = &Polynomial::one(big) - &tv;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&tv * &g.into_ring(big)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.into_ring(big)?);
        }
        let gb = buchberger(big, &gens)?;
        let base = self.ring.with_order(MonomialOrder::Grevlex);
        let mut kept = Vec::new();
        for g in gb.polys().iter().filter(|g| !g.involves(tmask)) {
            kept.push(g.into_ring(base)?);
        }
        // restricted to t-free polynomials the block order is grevlex, so
        // the kept elements are already the reduced grevlex basis
        let restricted = GroebnerBasis::from_reduced(base, kept.clone(), true, None);
        let out = Ideal::new(self.ring, kept.iter().map(|g| g.with_order(self.ring.order())))?;
        if restricted.is_reduced() {
            out.prime_cache(restricted);
        }
        Ok(out)
    }

    /// Intersection of several ideals, folded in increasing order of
    /// generator count.
    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal, GroebnerError> {
        let mut sorted: Vec<&Ideal> = ideals.iter().collect();
        sorted.sort_by_key(|i| i.generators.len());
        let Some((first, rest)) = sorted.split_first() else {
            return Err(GroebnerError::Empty);
        };
        let mut acc = (*first).clone();
        for i in rest {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    fn require_homogeneous(&self) -> Result<(), GroebnerError> {
        if self.homogeneous {
            Ok(())
        } else {
            Err(GroebnerError::NotHomogeneous)
        }
    }

    /// Dimension of the degree-`d` piece.
    pub fn graded_dim(&self, d: u32) -> Result<usize, GroebnerError> {
        self.require_homogeneous()?;
        Ok(self.groebner_through(d)?.leading_ideal_count(d))
    }

    /// A basis of the degree-`d` piece: one multiple `(m / lm g)·g` of a
    /// basis element for each monomial `m` of the leading-term ideal.
    pub fn graded_piece_basis(&self, d: u32) -> Result<Vec<Polynomial>, GroebnerError> {
        self.require_homogeneous()?;
        let gb = self.groebner_through(d)?;
        let mut out = Vec::new();
        for m in self.ring.monomials_of_degree(d) {
            let g = gb.polys().iter().find(|g| g.leading_monomial().is_some_and(|l| l.divides(&m)));
            if let Some(g) = g {
                let q = g.leading_monomial().and_then(|l| l.quotient_of(&m)).expect("divides");
                out.push(g.mul_term(&q, &crate::rational::Rational::ONE).with_order(self.ring.order()));
            }
        }
        Ok(out)
    }

    /// Dimension of the bidegree-`(a, b)` piece.
    pub fn bigraded_dim(&self, a: u32, b: u32) -> Result<usize, GroebnerError> {
        if !self.is_bihomogeneous() {
            return Err(GroebnerError::NotBihomogeneous);
        }
        Ok(self.groebner_through(a + b)?.leading_ideal_count_bigraded(a, b))
    }

    fn essential_generators(&self, up_to: u32) -> Result<Vec<crate::polyring::Monomial>, GroebnerError> {
        self.require_homogeneous()?;
        let opts = BuchbergerOptions { degree_bound: Some(up_to), ..Default::default() };
        let (gb, stats) = buchberger_with(self.ring, &self.generators, opts)?;
        self.publish(self.ring.order(), gb);
        Ok(stats.essential_generators)
    }

    /// Per-degree dimensions and minimal generator counts for `d ≤ up_to`.
    ///
    /// The count in degree `d` is `dim I_d − dim(R₁·I_{d−1})`, read off as
    /// the number of generators of degree `d` that survive reduction
    /// against the degree-`d` truncated basis of everything before them.
    pub fn minimal_generator_counts(&self, up_to: u32) -> Result<GradedReport, GroebnerError> {
        let essential = self.essential_generators(up_to)?;
        let gb = self.groebner_through(up_to)?;
        let mut report = GradedReport::new("", self.ring.nvars());
        for d in 0..=up_to {
            report.rows.push(GradedRow {
                degree: d,
                bidegree: None,
                ideal_dim: gb.leading_ideal_count(d),
                ambient_dim: self.ring.monomials_of_degree(d).len(),
                min_generators: Some(essential.iter().filter(|m| m.degree() == d).count()),
            });
        }
        Ok(report)
    }

    /// Bigraded version of [`Ideal::minimal_generator_counts`], one row per
    /// bidegree `(a, b)` with `a + b ≤ up_to`.
    pub fn bigraded_generator_counts(&self, up_to: u32) -> Result<GradedReport, GroebnerError> {
        if !self.is_bihomogeneous() {
            return Err(GroebnerError::NotBihomogeneous);
        }
        let essential = self.essential_generators(up_to)?;
        let gb = self.groebner_through(up_to)?;
        let mut report = GradedReport::new("", self.ring.nvars());
        for d in 0..=up_to {
            for a in (0..=d).rev() {
                let b = d - a;
                report.rows.push(GradedRow {
                    degree: d,
                    bidegree: Some((a, b)),
                    ideal_dim: gb.leading_ideal_count_bigraded(a, b),
                    ambient_dim: self.ring.monomials_of_bidegree(a, b).len(),
                    min_generators: Some(essential.iter().filter(|m| self.ring.bidegree(m) == (a, b)).count()),
                });
            }
        }
        Ok(report)
    }

    pub fn to_document(&self) -> IdealDocument {
        IdealDocument {
            variables: self.ring.var_names(),
            order: self.ring.order().name(self.ring.nvars()),
            generators: self.generators.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_document(doc: &IdealDocument) -> Result<Ideal, GroebnerError> {
        let order = MonomialOrder::parse_name(&doc.order)
            .ok_or_else(|| GroebnerError::Document(format!("unknown order `{}`", doc.order)))?;
        let rank = doc.variables.iter().filter(|v| v.starts_with('x')).count();
        let extra = doc.variables.len().checked_sub(2 * rank).ok_or_else(|| {
            GroebnerError::Document("fewer y-variables than x-variables".into())
        })?;
        if doc.variables.len() > crate::polyring::MAX_VARS {
            return Err(GroebnerError::Document("too many variables".into()));
        }
        let ring = Ring::with_extra(rank, extra, order);
        if ring.var_names() != doc.variables {
            return Err(GroebnerError::Document(format!(
                "variables must be {:?}",
                ring.var_names()
            )));
        }
        let gens: Vec<&str> = doc.generators.iter().map(String::as_str).collect();
        Ideal::parse(ring, &gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Ideal, GroebnerError> {
        let doc: IdealDocument = serde_json::from_str(s).map_err(|e| GroebnerError::Document(e.to_string()))?;
        Ideal::from_document(&doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(rank: usize) -> Ring {
        Ring::new(rank, MonomialOrder::Grevlex)
    }

    fn ideal(r: Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn p(r: Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn membership() {
        let r = ring(1);
        let m = ideal(r, &["x1", "y1"]);
        assert!(m.contains(&p(r, "x1")).unwrap());
        assert!(!m.contains(&Polynomial::one(r)).unwrap());
        assert_eq!(m.normal_form(&p(r, "x1 + 1")).unwrap(), Polynomial::one(r));
        assert!(m.normal_form(&p(r, "x1")).unwrap().is_zero());
    }

    #[test]
    fn intersections() {
        let r = ring(1);
        let i = ideal(r, &["x1"]).intersect(&ideal(r, &["y1"])).unwrap();
        assert_eq!(i.generators(), &[p(r, "x1*y1")]);
        let m = ideal(r, &["x1", "y1"]);
        assert!(m.intersect(&Ideal::unit(r)).unwrap().equals(&m).unwrap());
        assert!(Ideal::unit(r).intersect(&m).unwrap().equals(&m).unwrap());
        let gb = i.groebner().unwrap();
        assert!(gb.is_complete() && gb.is_reduced());
    }

    #[test]
    fn powers() {
        let r = ring(1);
        let m = ideal(r, &["x1", "y1"]);
        let sq = m.power(2).unwrap();
        assert!(sq.equals(&ideal(r, &["x1^2", "x1*y1", "y1^2"])).unwrap());
        assert_eq!(sq.generators().len(), 3);
        assert!(m.power(1).unwrap().equals(&m).unwrap());
        assert_eq!(ideal(r, &["x1", "y1", "x1 + y1"]).power(3).unwrap().generators().len(), 10);
    }

    #[test]
    fn equality() {
        let r = ring(1);
        assert!(ideal(r, &["x1", "y1"]).equals(&ideal(r, &["y1", "x1 + y1"])).unwrap());
        assert!(!ideal(r, &["x1"]).equals(&ideal(r, &["x1", "y1^2"])).unwrap());
    }

    #[test]
    fn elimination() {
        let r = Ring::with_extra(1, 1, MonomialOrder::Grevlex);
        let i = ideal(r, &["t1 - x1", "t1 - y1"]);
        let e = i.eliminate(1 << 2).unwrap();
        assert!(e.equals(&ideal(r, &["x1 - y1"])).unwrap());
        assert_eq!(e.generators().len(), 1);
        assert!(i.eliminate(0).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn graded_dimensions() {
        let r = ring(1);
        let m = ideal(r, &["x1", "y1"]);
        assert_eq!(m.graded_dim(1).unwrap(), 2);
        assert_eq!(m.graded_dim(0).unwrap(), 0);
        let sq = m.power(2).unwrap();
        let rep = sq.minimal_generator_counts(4).unwrap();
        let counts: Vec<usize> = rep.rows.iter().map(|r| r.min_generators.unwrap()).collect();
        assert_eq!(counts, vec![0, 0, 3, 0, 0]);
        assert!(rep.is_consistent());
        let x = ideal(r, &["x1"]).minimal_generator_counts(3).unwrap();
        assert_eq!(x.total_min_generators(), 1);
        assert_eq!(x.row(1).unwrap().min_generators, Some(1));
        assert!(matches!(ideal(r, &["x1 - 1"]).graded_dim(1), Err(GroebnerError::NotHomogeneous)));
    }

    #[test]
    fn bigraded_dimensions() {
        let r = ring(1);
        let i = ideal(r, &["x1"]).intersect(&ideal(r, &["x1", "y1"]).power(2).unwrap()).unwrap();
        assert_eq!(i.bigraded_dim(1, 1).unwrap(), 1);
        assert_eq!(i.bigraded_dim(2, 0).unwrap(), 1);
        assert_eq!(i.bigraded_dim(0, 2).unwrap(), 0);
        let rep = i.bigraded_generator_counts(2).unwrap();
        assert_eq!(rep.bigraded_row(1, 1).unwrap().min_generators, Some(1));
        assert_eq!(rep.total_min_generators(), 2);
        assert!(matches!(ideal(r, &["x1 - y1"]).bigraded_dim(1, 0), Err(GroebnerError::NotBihomogeneous)));
    }

    #[test]
    fn json_roundtrip() {
        let r = ring(2);
        let i = ideal(r, &["x1*y2 - 1/2*x2", "y1^3"]);
        let back = Ideal::from_json(&i.to_json()).unwrap();
        assert_eq!(back.generators(), i.generators());
        assert!(Ideal::from_json(r#"{"variables":["a"],"order":"grevlex","generators":[]}"#).is_err());
        assert!(Ideal::from_json(r#"{"variables":["x1","y1"],"order":"nope","generators":[]}"#).is_err());
    }
}
