//! Bipartitions, the 2-core/2-quotient bijection, `{0}`-hearts and their
//! classes, defect-one symbols and families in types B/C.

mod partition;
mod symbol;
mod table;

pub use partition::{
    j_heart, j_heart_with, tau, tau_with, two_core, two_quotient, two_quotient_with, Bipartition, Partition,
    RunnerConvention,
};
pub use symbol::{families, family_key, symbol_of, Symbol};
pub use table::{
    check_family_class_correspondence, check_family_class_correspondence_with, j_classes, CellsTable, JClass,
    TableRow, MAX_TABLE_N,
};

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn bp(l: &[u32], m: &[u32]) -> Bipartition {
        Bipartition::new(p(l), p(m))
    }

    #[test]
    fn cores() {
        assert_eq!(two_core(&p(&[6])), Partition::empty());
        assert_eq!(two_core(&Partition::empty()), Partition::empty());
        assert_eq!(two_core(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(two_core(&p(&[3, 2, 1])), p(&[3, 2, 1]));
        assert_eq!(two_core(&p(&[3])), p(&[1]));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&bp(&[3], &[])), p(&[6]));
        assert_eq!(tau(&bp(&[], &[1, 1, 1])), p(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(tau(&bp(&[2], &[1])), p(&[4, 2]));
        assert_eq!(tau_with(&bp(&[3], &[]), RunnerConvention::LambdaEven), p(&[5, 1]));
        let images: Vec<Partition> = Bipartition::all(3).iter().map(tau).collect();
        assert_eq!(images.len(), 10);
        assert!(images.iter().all(|q| q.size() == 6 && two_core(q).is_empty()));
    }

    #[test]
    fn hearts() {
        assert_eq!(j_heart(&p(&[6])), p(&[6]));
        assert_eq!(j_heart_with(&p(&[6]), &[1], 2), p(&[5]));
        assert_eq!(j_heart(&Partition::empty()), Partition::empty());
        assert_eq!(j_heart(&p(&[2, 1, 1, 1, 1])), p(&[2, 1, 1, 1]));
        assert_eq!(j_heart(&p(&[5, 1])), p(&[4, 1]));
    }

    #[test]
    fn symbols() {
        let s = symbol_of(&bp(&[], &[1, 1, 1]));
        assert_eq!((s.top.as_slice(), s.bottom.as_slice()), (&[0, 1, 2, 3][..], &[1, 2, 3][..]));
        let s = symbol_of(&bp(&[2], &[1]));
        assert_eq!((s.top.as_slice(), s.bottom.as_slice()), (&[0, 3][..], &[1][..]));
        let s = symbol_of(&bp(&[3], &[]));
        assert_eq!((s.top.as_slice(), s.bottom.as_slice()), (&[3][..], &[][..]));
        assert_eq!(s.to_string(), "3 / -");
        assert_eq!(s.shifted_to(1).to_string(), "0 4 / 0");
        assert_eq!(s.a_value(), 0);
        assert_eq!(symbol_of(&bp(&[], &[1, 1, 1])).a_value(), 9);
    }

    #[test]
    fn classes_and_families() {
        let classes = j_classes(3);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 1, 3, 3]);
        assert_eq!(j_classes(1).len(), 2);
        assert_eq!(families(3).len(), 6);
        assert_eq!(families(1).len(), 2);
        assert!(families(3).contains(&vec![bp(&[], &[2, 1]), bp(&[1], &[1, 1]), bp(&[1, 1, 1], &[])]));
        assert!(check_family_class_correspondence(3));
    }

    #[test]
    fn table_rendering() {
        let t = CellsTable::build(3);
        assert_eq!(t.rows.len(), 10);
        assert_eq!(t.distinct_hearts(), 6);
        assert_eq!(t.rows[0].partition, "1,0,1,0,1,0");
        assert_eq!(t.rows[9].bipartition, "((3),∅)");
        assert!(CellsTable::build(0).rows.is_empty());
        assert_eq!(CellsTable::build(1).rows.len(), 2);
    }
}
