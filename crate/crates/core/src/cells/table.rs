use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{family_key, j_heart, symbol_of, tau_with, Bipartition, Partition, RunnerConvention};

/// Partitions of `2n` in `τ(P(2, n))` sharing a `{0}`-heart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JClass {
    pub heart: Partition,
    pub members: Vec<Partition>,
}

/// Groups `τ(P(2, n))` by `{0}`-heart, classes in order of their first
/// member.
pub fn j_classes(n: u32) -> Vec<JClass> {
    let mut images: Vec<Partition> = Bipartition::all(n).iter().map(super::tau).collect();
    images.sort();
    let mut out: Vec<JClass> = Vec::new();
    for p in images {
        let h = j_heart(&p);
        match out.iter_mut().find(|c| c.heart == h) {
            Some(c) => c.members.push(p),
            None => out.push(JClass {
                heart: h,
                members: vec![p],
            }),
        }
    }
    out
}

/// Whether equal symbol entries coincide with equal hearts of `τ`, over all
/// pairs in `P(2, n)`.
pub fn check_family_class_correspondence_with(n: u32, conv: RunnerConvention) -> bool {
    let data: Vec<(Vec<u32>, Partition)> = Bipartition::all(n)
        .iter()
        .map(|bp| (family_key(bp), j_heart(&tau_with(bp, conv))))
        .collect();
    data.iter()
        .all(|(k1, h1)| data.iter().all(|(k2, h2)| (k1 == k2) == (h1 == h2)))
}

pub fn check_family_class_correspondence(n: u32) -> bool {
    check_family_class_correspondence_with(n, RunnerConvention::LambdaOdd)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub partition: String,
    pub heart: String,
    pub bipartition: String,
    pub symbol: String,
}

/// The bipartitions of `n` with their `τ`-images, hearts and symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellsTable {
    pub n: u32,
    pub rows: Vec<TableRow>,
}

pub const MAX_TABLE_N: u32 = 8;

impl CellsTable {
    /// Rows grouped by heart; groups ordered by decreasing symbol length,
    /// then entry multiset, rows within a group by partition.
    pub fn build(n: u32) -> Self {
        if n == 0 {
            return Self { n, rows: Vec::new() };
        }
        let mut groups: BTreeMap<Partition, Vec<(Partition, Bipartition)>> = BTreeMap::new();
        for bp in Bipartition::all(n) {
            let p = super::tau(&bp);
            groups.entry(j_heart(&p)).or_default().push((p, bp));
        }
        let mut groups: Vec<(Partition, Vec<(Partition, Bipartition)>)> = groups.into_iter().collect();
        for (_, members) in &mut groups {
            members.sort();
        }
        groups.sort_by_key(|(_, members)| {
            let s = symbol_of(&members[0].1);
            (std::cmp::Reverse(s.top.len()), s.entries())
        });
        let rows = groups
            .iter()
            .flat_map(|(heart, members)| {
                members.iter().map(move |(p, bp)| TableRow {
                    partition: p.residue_diagram(),
                    heart: heart.residue_diagram(),
                    bipartition: bp.to_string(),
                    symbol: symbol_of(bp).to_string(),
                })
            })
            .collect();
        Self { n, rows }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("partition\theart\tbipartition\tsymbol\n");
        for r in &self.rows {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", r.partition, r.heart, r.bipartition, r.symbol));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn distinct_hearts(&self) -> usize {
        let mut h: Vec<&str> = self.rows.iter().map(|r| r.heart.as_str()).collect();
        h.sort_unstable();
        h.dedup();
        h.len()
    }
}
