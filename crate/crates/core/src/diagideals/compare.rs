use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::Idempotent;
use crate::groebner::{GradedReport, GradedRow, GroebnerError, Ideal};
use crate::linalg::{Echelon, SparseVec};
use crate::polyring::{Monomial, Polynomial};
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    LeftStrictlyContained,
    RightStrictlyContained,
    /// Neither ideal contains the other.
    Incomparable,
    /// One containment holds but no dimension gap was found up to the bound.
    IncomparableAtBound,
}

impl Relation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::LeftStrictlyContained => "left-strictly-contained",
            Relation::RightStrictlyContained => "right-strictly-contained",
            Relation::Incomparable => "incomparable",
            Relation::IncomparableAtBound => "incomparable-at-bound",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    /// First degree where the graded dimensions differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_left: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_right: Option<usize>,
    /// Every generator of the left ideal lies in the right one.
    pub left_in_right: bool,
    pub right_in_left: bool,
    pub left_generators: usize,
    pub right_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComparisonVerdict {
    #[serde(rename = "type")]
    pub type_label: String,
    pub left: String,
    pub right: String,
    pub relation: Relation,
    pub certificate: Certificate,
    pub bounds_used: u32,
    /// Wall-clock seconds per phase; only filled when requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<BTreeMap<String, f64>>,
}

/// Compares two homogeneous ideals: mutual generator membership decides
/// equality; a one-way containment is certified strict by the first
/// degree `≤ bound` where the graded dimensions differ.
pub fn compare(
    type_label: &str,
    left: (&str, &Ideal),
    right: (&str, &Ideal),
    bound: u32,
) -> Result<ComparisonVerdict, GroebnerError> {
    let (lname, l) = left;
    let (rname, r) = right;
    if !l.is_homogeneous() || !r.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let left_in_right = r.contains_ideal(l)?;
    let right_in_left = l.contains_ideal(r)?;
    let mut cert = Certificate {
        left_in_right,
        right_in_left,
        left_generators: l.generators().len(),
        right_generators: r.generators().len(),
        ..Default::default()
    };
    let relation = match (left_in_right, right_in_left) {
        (true, true) => Relation::Equal,
        (false, false) => Relation::Incomparable,
        (true, false) | (false, true) => {
            let mut found = None;
            for d in 0..=bound {
                let (dl, dr) = (l.graded_dim(d)?, r.graded_dim(d)?);
                if dl != dr {
                    found = Some((d, dl, dr));
                    break;
                }
            }
            match found {
                Some((d, dl, dr)) => {
                    cert.degree = Some(d);
                    cert.dim_left = Some(dl);
                    cert.dim_right = Some(dr);
                    if left_in_right {
                        Relation::LeftStrictlyContained
                    } else {
                        Relation::RightStrictlyContained
                    }
                }
                None => Relation::IncomparableAtBound,
            }
        }
    };
    Ok(ComparisonVerdict {
        type_label: type_label.to_string(),
        left: lname.to_string(),
        right: rname.to_string(),
        relation,
        certificate: cert,
        bounds_used: bound,
        timings: None,
    })
}

fn to_sparse(f: &Polynomial, column: &mut HashMap<Monomial, usize>) -> SparseVec {
    let mut v: SparseVec = f
        .terms()
        .iter()
        .map(|t| {
            let n = column.len();
            (*column.entry(t.mono).or_insert(n), t.coeff.clone())
        })
        .collect();
    v.sort_by_key(|e| e.0);
    v
}

/// Dimensions of `idempotent(multiplier · I_d)` for `d ≤ up_to`.
///
/// The image lies in one isotypic component of `R_{d + deg multiplier}`,
/// whose dimension (character formula) bounds the rank and lets each
/// degree stop early.
pub fn invariant_image_dims(
    ideal: &Ideal,
    group: &WeylGroup,
    idempotent: Idempotent,
    multiplier: Option<&Polynomial>,
    up_to: u32,
) -> Result<GradedReport, GroebnerError> {
    let ring = ideal.ring();
    let shift = multiplier.and_then(Polynomial::degree).unwrap_or(0);
    let iso = group.isotypic_dims(up_to + shift, idempotent == Idempotent::Antisymmetrizer);
    let label = format!(
        "{}({}I)",
        idempotent.name(),
        if multiplier.is_some() { "m·" } else { "" }
    );
    let mut report = GradedReport::new(label, ring.nvars());
    for d in 0..=up_to {
        let target = d + shift;
        let bound: usize = (0..=target as usize).map(|a| iso[a][target as usize - a]).sum();
        let mut ech = Echelon::new();
        let mut column = HashMap::new();
        if bound > 0 {
            for f in ideal.graded_piece_basis(d)? {
                if ech.rank() == bound {
                    break;
                }
                let g = match multiplier {
                    Some(m) => m * &f,
                    None => f,
                };
                let img = idempotent.apply(&g, group)?;
                if !img.is_zero() {
                    ech.insert(to_sparse(&img, &mut column));
                }
            }
        }
        report.rows.push(GradedRow {
            degree: d,
            bidegree: None,
            ideal_dim: ech.rank(),
            ambient_dim: ring.monomials_of_degree(target).len(),
            min_generators: None,
        });
    }
    Ok(report)
}

/// Side-by-side graded dimensions of two ideals.
pub fn graded_comparison(left: &Ideal, right: &Ideal, up_to: u32) -> Result<Vec<(u32, usize, usize)>, GroebnerError> {
    (0..=up_to)
        .map(|d| Ok((d, left.graded_dim(d)?, right.graded_dim(d)?)))
        .collect()
}
