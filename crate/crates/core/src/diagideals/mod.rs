//! The ideals attached to a root system: the alternants `A`, the ideal `J`
//! they generate, the root-hyperplane ideal `I`, its symbolic powers and
//! the discriminant `Δ`, together with exact comparisons between them.

mod alternants;
mod compare;
mod ideals;
mod idempotent;

pub use alternants::{alternant_basis, AlternantBasis, AlternantBuilder};
pub use compare::{compare, graded_comparison, invariant_image_dims, Certificate, ComparisonVerdict, Relation};
pub use ideals::{delta, ideal_i, ideal_j, pair_ideals, symbolic_power, AlternantIdeal};
pub use idempotent::{antisymmetrize, reynolds, Idempotent};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::polyring::Polynomial;
    use crate::weyl::{RootSystem, WeylGroup};

    fn setup(label: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(label).unwrap();
        let w = WeylGroup::of(&rs).unwrap();
        (rs, w)
    }

    #[test]
    fn delta_small_cases() {
        let (a1, w) = setup("A1");
        let d = delta(&a1);
        assert_eq!(d.to_string(), "x1 - x2");
        let (g2, _) = setup("G2");
        assert_eq!(delta(&g2).degree(), Some(6));
        for k in 0..w.order() {
            let expect = if w.sign(k) < 0 { -&d } else { d.clone() };
            assert_eq!(w.act(k, &d).unwrap(), expect);
        }
    }

    #[test]
    fn idempotent_examples() {
        let (a1, w) = setup("A1");
        let ring = a1.ring();
        assert_eq!(reynolds(&Polynomial::one(ring), &w).unwrap(), Polynomial::one(ring));
        let x1 = Polynomial::var(ring, 0);
        let expect = Polynomial::parse(ring, "1/2*x1 - 1/2*x2").unwrap();
        assert_eq!(antisymmetrize(&x1, &w).unwrap(), expect);
    }

    #[test]
    fn alternant_examples() {
        let (a1, w) = setup("A1");
        let ring = a1.ring();
        assert_eq!(alternant_basis(&w, ring, 1, 0), vec![Polynomial::parse(ring, "x1 - x2").unwrap()]);
        assert!(alternant_basis(&w, ring, 0, 0).is_empty());
        let (g2, wg) = setup("G2");
        let b = AlternantBuilder::new(&wg, g2.ring(), 1);
        assert!(b.bidegree(1, 0).is_empty() && b.bidegree(0, 1).is_empty() && b.bidegree(0, 0).is_empty());
    }

    #[test]
    fn rank_one_ideals_agree() {
        let (a1, w) = setup("A1");
        let ring = a1.ring();
        let i = ideal_i(&a1).unwrap();
        let expect = Ideal::parse(ring, &["x1 - x2", "y1 - y2"]).unwrap();
        assert!(i.equals(&expect).unwrap());
        let j = ideal_j(&a1, &w, 2).unwrap();
        assert!(j.ideal.equals(&expect).unwrap());
        for k in 1..=3 {
            assert!(symbolic_power(&a1, k).unwrap().equals(&j.ideal.power(k).unwrap()).unwrap());
        }
        let v = compare("A1", ("I", &i), ("I", &i), 3).unwrap();
        assert_eq!(v.relation, Relation::Equal);
    }

    #[test]
    fn symmetrizer_kills_rank_one_generators() {
        let (a1, w) = setup("A1");
        let i = ideal_i(&a1).unwrap();
        let rep = invariant_image_dims(&i, &w, Idempotent::Symmetrizer, None, 2).unwrap();
        assert_eq!(rep.row(1).unwrap().ideal_dim, 0);
        let alt = invariant_image_dims(&i, &w, Idempotent::Antisymmetrizer, None, 1).unwrap();
        assert_eq!(alt.row(1).unwrap().ideal_dim, 2);
    }

    #[test]
    fn strict_containment_certificate() {
        let (a1, _) = setup("A1");
        let ring = a1.ring();
        let small = Ideal::parse(ring, &["x1^2", "y1"]).unwrap();
        let big = Ideal::parse(ring, &["x1", "y1"]).unwrap();
        let v = compare("A1", ("S", &small), ("B", &big), 4).unwrap();
        assert_eq!(v.relation, Relation::LeftStrictlyContained);
        assert_eq!((v.certificate.degree, v.certificate.dim_left, v.certificate.dim_right), (Some(1), Some(1), Some(2)));
        let r = compare("A1", ("B", &big), ("S", &small), 4).unwrap();
        assert_eq!(r.relation, Relation::RightStrictlyContained);
        let other = Ideal::parse(ring, &["x2"]).unwrap();
        assert_eq!(compare("A1", ("B", &big), ("O", &other), 2).unwrap().relation, Relation::Incomparable);
    }
}
