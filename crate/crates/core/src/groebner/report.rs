use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One row of a graded report. `bidegree` is set for bigraded reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRow {
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bidegree: Option<(u32, u32)>,
    pub ideal_dim: usize,
    pub ambient_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_generators: Option<usize>,
}

/// Per-degree (or per-bidegree) dimension table of a homogeneous ideal or
/// of a graded subspace such as an invariant image.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedReport {
    pub label: String,
    /// Number of ring variables, for the `R₁·I_d` bookkeeping check.
    pub nvars: usize,
    pub rows: Vec<GradedRow>,
}

impl GradedReport {
    pub fn new(label: impl Into<String>, nvars: usize) -> Self {
        Self {
            label: label.into(),
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn row(&self, degree: u32) -> Option<&GradedRow> {
        self.rows.iter().find(|r| r.degree == degree && r.bidegree.is_none())
    }

    pub fn bigraded_row(&self, a: u32, b: u32) -> Option<&GradedRow> {
        self.rows.iter().find(|r| r.bidegree == Some((a, b)))
    }

    pub fn total_min_generators(&self) -> usize {
        self.rows.iter().filter_map(|r| r.min_generators).sum()
    }

    pub fn ideal_dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.ideal_dim).collect()
    }

    /// Checks the structural invariants of the table.
    pub fn is_consistent(&self) -> bool {
        let local = self.rows.iter().all(|r| {
            r.ideal_dim <= r.ambient_dim && r.min_generators.is_none_or(|g| g <= r.ideal_dim)
        });
        // dim(R₁·I_d) = dim I_{d+1} - mingens_{d+1} ≤ n · dim I_d
        let graded: Vec<&GradedRow> = self.rows.iter().filter(|r| r.bidegree.is_none()).collect();
        let chained = graded.windows(2).all(|w| {
            let (lo, hi) = (w[0], w[1]);
            match hi.min_generators {
                Some(g) if hi.degree == lo.degree + 1 => hi.ideal_dim - g <= self.nvars * lo.ideal_dim,
                _ => true,
            }
        });
        local && chained
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree\tbidegree\tideal_dim\tambient_dim\tmin_generators\n");
        for r in &self.rows {
            let bd = r.bidegree.map_or("-".to_string(), |(a, b)| format!("{a},{b}"));
            let mg = r.min_generators.map_or("-".to_string(), |g| g.to_string());
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", r.degree, bd, r.ideal_dim, r.ambient_dim, mg);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(degree: u32, ideal_dim: usize, ambient_dim: usize, g: usize) -> GradedRow {
        GradedRow {
            degree,
            bidegree: None,
            ideal_dim,
            ambient_dim,
            min_generators: Some(g),
        }
    }

    #[test]
    fn consistency_checks() {
        let mut r = GradedReport::new("m", 2);
        r.rows = vec![row(0, 0, 1, 0), row(1, 2, 2, 2), row(2, 3, 3, 0)];
        assert!(r.is_consistent());
        assert_eq!(r.total_min_generators(), 2);
        r.rows[2].ideal_dim = 4;
        assert!(!r.is_consistent());
    }

    #[test]
    fn tsv_layout() {
        let mut r = GradedReport::new("m", 2);
        r.rows = vec![row(1, 2, 2, 2)];
        assert_eq!(r.to_tsv().lines().nth(1), Some("1\t-\t2\t2\t2"));
    }
}
