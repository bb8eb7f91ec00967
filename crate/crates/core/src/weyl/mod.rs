//! Root systems of types A–D and G₂ and their Weyl groups, acting
//! diagonally on `ℚ[x₁..xₙ, y₁..yₙ]`.

mod group;
mod roots;

pub use group::{WeylGroup, MAX_GROUP_ORDER};
pub use roots::{Realization, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("unsupported root system label `{0}`")]
    UnsupportedLabel(String),
    #[error("invalid root data: {0}")]
    InvalidRoots(String),
    #[error("invalid root system spec: {0}")]
    InvalidSpec(String),
    #[error("vector is not a root")]
    NotARoot,
    #[error("group closure exceeded {0} elements")]
    GroupTooLarge(usize),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RationalMatrix;
    use crate::polyring::Polynomial;
    use crate::rational::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_int(c)).collect()
    }

    #[test]
    fn positive_root_counts() {
        for (label, count, ambient) in [
            ("A1", 1, 2),
            ("A2", 3, 3),
            ("A3", 6, 4),
            ("B2", 4, 2),
            ("B3", 9, 3),
            ("C3", 9, 3),
            ("D4", 12, 4),
            ("G2", 6, 3),
        ] {
            let rs = RootSystem::build(label).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{label}");
            assert_eq!(rs.ambient_dim(), ambient, "{label}");
        }
        assert_eq!(RootSystem::build("A1").unwrap().positive_roots(), &[ints(&[1, -1])]);
        assert!(RootSystem::build("E6").is_err());
        assert!(RootSystem::build("B5").is_err());
        assert!(RootSystem::build("G3").is_err());
    }

    #[test]
    fn explicit_reflection_matrices() {
        let b3 = RootSystem::build("B3").unwrap();
        let m1 = RationalMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let m3 = RationalMatrix::from_i64_rows(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(b3.reflection_matrix(&ints(&[1, -1, 0])).unwrap(), m1);
        assert_eq!(b3.reflection_matrix(&ints(&[1, 0, 0])).unwrap(), m3);
        assert_eq!(b3.reflection_matrix(&ints(&[1, 1, 1])), Err(WeylError::NotARoot));

        let g2 = RootSystem::build("G2").unwrap();
        let m2 = RationalMatrix::from_rows(vec![
            vec![q(-1, 3), q(2, 3), q(2, 3)],
            vec![q(2, 3), q(2, 3), q(-1, 3)],
            vec![q(2, 3), q(-1, 3), q(2, 3)],
        ]);
        let s = g2.reflection_matrix(&ints(&[2, -1, -1])).unwrap();
        assert_eq!(s, m2);
        assert_eq!(&s * &s, RationalMatrix::identity(3));
    }

    #[test]
    fn group_orders() {
        for (label, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("G2", 12), ("D4", 192)] {
            let rs = RootSystem::build(label).unwrap();
            assert_eq!(WeylGroup::of(&rs).unwrap().order(), order, "{label}");
        }
        let g2e = RootSystem::build_with("G2", Realization::Essential).unwrap();
        assert_eq!(g2e.positive_roots().len(), 6);
        assert_eq!(WeylGroup::of(&g2e).unwrap().order(), 12);
    }

    #[test]
    fn explicit_matrix_generators_close_to_same_groups() {
        let m1 = RationalMatrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let m2 = RationalMatrix::from_rows(vec![
            vec![q(-1, 3), q(2, 3), q(2, 3)],
            vec![q(2, 3), q(2, 3), q(-1, 3)],
            vec![q(2, 3), q(-1, 3), q(2, 3)],
        ]);
        let g = WeylGroup::generate(&[m1.clone(), m2]).unwrap();
        assert_eq!(g.order(), 12);
        let b2 = RationalMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let b3 = RationalMatrix::from_i64_rows(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let w = WeylGroup::generate(&[m1, b2, b3]).unwrap();
        assert_eq!(w.order(), 48);
        let ours = WeylGroup::of(&RootSystem::build("B3").unwrap()).unwrap();
        assert!(w.elements().iter().all(|m| ours.index_of(m).is_some()));
    }

    #[test]
    fn generators_are_involutions_with_sign_minus_one() {
        let w = WeylGroup::of(&RootSystem::build("G2").unwrap()).unwrap();
        for &g in w.generators() {
            assert_eq!(w.multiply(g, g), w.identity());
            assert_eq!(w.sign(g), -1);
        }
    }

    #[test]
    fn delta_is_anti_invariant_and_pairing_invariant() {
        let rs = RootSystem::build("B3").unwrap();
        let w = WeylGroup::of(&rs).unwrap();
        let ring = rs.ring();
        let delta = rs
            .positive_roots()
            .iter()
            .fold(Polynomial::one(ring), |acc, a| &acc * &rs.root_form(ring, a));
        let pairing = Polynomial::parse(ring, "x1*y1 + x2*y2 + x3*y3").unwrap();
        for k in 0..w.order() {
            let d = w.act(k, &delta).unwrap();
            if w.sign(k) < 0 {
                assert_eq!(d, -&delta);
            } else {
                assert_eq!(d, delta);
            }
            assert_eq!(w.act(k, &pairing).unwrap(), pairing);
        }
        assert_eq!(w.act(w.identity(), &delta).unwrap(), delta);
    }

    #[test]
    fn molien_counts_small_cases() {
        // S₂ swapping x1,x2 and y1,y2: alternants of bidegree (1,0) are x1−x2
        let w = WeylGroup::of(&RootSystem::build("A1").unwrap()).unwrap();
        let sign = w.isotypic_dims(2, true);
        assert_eq!(sign[1][0], 1);
        assert_eq!(sign[0][0], 0);
        let triv = w.isotypic_dims(2, false);
        assert_eq!(triv[0][0], 1);
        assert_eq!(triv[1][1], 2);
    }

    #[test]
    fn custom_rank_one_and_json() {
        let rs = RootSystem::from_json(r#"{"custom": {"simple_roots": [[1]]}}"#).unwrap();
        assert_eq!(rs.positive_roots(), &[ints(&[1])]);
        assert_eq!(rs.coroot(&ints(&[1])), ints(&[2]));
        let b2 = RootSystem::from_json(r#"{"custom": {"simple_roots": [[1,-1],[0,1]], "label": "b"}}"#).unwrap();
        assert_eq!(b2.positive_roots().len(), 4);
        let g2 = RootSystem::from_json(r#"{"label": "G2", "realization": "essential"}"#).unwrap();
        assert_eq!(g2.ambient_dim(), 2);
        assert!(RootSystem::from_json(r#"{"custom": {"simple_roots": [[1,0],[2,0]]}}"#).is_err());
        assert!(RootSystem::from_json(r#"{"nothing": 1}"#).is_err());
    }
}
