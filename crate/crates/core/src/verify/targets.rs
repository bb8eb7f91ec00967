use serde_json::json;

use super::{Check, Outcome, Parameters, Target, VerifyError};
use crate::cells::{
    check_family_class_correspondence, check_family_class_correspondence_with, families, j_classes, CellsTable,
    RunnerConvention, MAX_TABLE_N,
};
use crate::diagideals::{
    compare, delta, graded_comparison, ideal_i, ideal_j, invariant_image_dims, symbolic_power, Idempotent, Relation,
};
use crate::dunkl::{default_parameters, rank_one_symbol_checks, rank_one_system, run_suite, DunklContext};
use crate::groebner::Ideal;
use crate::weyl::{Realization, RootSystem, WeylGroup};

fn system(label: &str, realization: &Option<String>) -> Result<(RootSystem, WeylGroup), VerifyError> {
    let real: Realization = realization.as_deref().unwrap_or("ambient").parse()?;
    let rs = RootSystem::build_with(label, real)?;
    let w = WeylGroup::of(&rs)?;
    Ok((rs, w))
}

fn dims(v: &[usize]) -> String {
    format!("{v:?}")
}

fn fixed_type(p: &Parameters, label: &str) -> Result<String, VerifyError> {
    match p.type_label.as_deref() {
        None => Ok(label.to_string()),
        Some(t) if t.eq_ignore_ascii_case(label) => Ok(label.to_string()),
        Some(t) => Err(VerifyError::Usage(format!("this target runs on {label}, not `{t}`"))),
    }
}

fn validate_realization(p: &Parameters, default: &str) -> Result<String, VerifyError> {
    let r = p.realization.clone().unwrap_or_else(|| default.to_string());
    r.parse::<Realization>()?;
    Ok(r)
}

fn bound(p: &Parameters, default: u32) -> Result<u32, VerifyError> {
    match p.degree_bound.unwrap_or(default) {
        0 => Err(VerifyError::Usage("degree bound must be positive".into())),
        d => Ok(d),
    }
}

/// `J` against `I` for G₂ in ℝ³; expected equal.
pub struct G2IdealEquality;

impl Target for G2IdealEquality {
    fn name(&self) -> &'static str {
        "g2-ideal-equality"
    }

    fn summary(&self) -> &'static str {
        "alternant ideal J equals the root-hyperplane ideal I for G2"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        Ok(Parameters {
            type_label: Some(fixed_type(p, "G2")?),
            degree_bound: Some(bound(p, 10)?),
            realization: Some(validate_realization(p, "ambient")?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let d = p.degree_bound.expect("resolved");
        let (rs, w) = system("G2", &p.realization)?;
        let i = out.timed("ideal-i", || ideal_i(&rs))?;
        let j = out.timed("ideal-j", || ideal_j(&rs, &w, d))?;
        let v = out.timed("compare", || compare("G2", ("J", &j.ideal), ("I", &i), d))?;
        out.relation = Some(v.relation);
        out.push(Check::expect("relation", Relation::Equal.as_str(), v.relation.as_str()).with_certificate(&v.certificate));
        let gi = out.timed("generators", || i.minimal_generator_counts(d))?;
        let gj = out.timed("generators", || j.ideal.minimal_generator_counts(d))?;
        out.push(Check::reported(
            "minimal-generators",
            format!("J {} total {}, I {} total {}", dims(&mingens(&gj)), gj.total_min_generators(), dims(&mingens(&gi)), gi.total_min_generators()),
        ));
        out.report("J", gj);
        out.report("I", gi);
        Ok(())
    }
}

fn mingens(r: &crate::groebner::GradedReport) -> Vec<usize> {
    r.rows.iter().map(|row| row.min_generators.unwrap_or(0)).collect()
}

/// `J ⊊ I` for B₃ with a one-dimensional gap and one extra generator.
pub struct B3StrictInclusion;

impl Target for B3StrictInclusion {
    fn name(&self) -> &'static str {
        "b3-strict-inclusion"
    }

    fn summary(&self) -> &'static str {
        "J is strictly contained in I for B3, with one extra generator of I"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        Ok(Parameters {
            type_label: Some(fixed_type(p, "B3")?),
            degree_bound: Some(bound(p, 10)?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let d = p.degree_bound.expect("resolved");
        let (rs, w) = system("B3", &None)?;
        let i = out.timed("ideal-i", || ideal_i(&rs))?;
        let j = out.timed("ideal-j", || ideal_j(&rs, &w, d))?;
        let v = out.timed("compare", || compare("B3", ("J", &j.ideal), ("I", &i), d))?;
        out.relation = Some(v.relation);
        out.push(
            Check::expect("relation", Relation::LeftStrictlyContained.as_str(), v.relation.as_str())
                .with_certificate(&v.certificate),
        );
        let table = out.timed("graded-dims", || graded_comparison(&j.ideal, &i, d))?;
        let gaps: Vec<(u32, usize, usize)> = table.iter().copied().filter(|(_, a, b)| a != b).collect();
        let diffs: Vec<i64> = gaps.iter().map(|&(_, a, b)| b as i64 - a as i64).collect();
        out.push(
            Check::expect(
                "graded-gap",
                "1 degree, difference [1]",
                format!("{} degree{}, difference {diffs:?}", gaps.len(), if gaps.len() == 1 { "" } else { "s" }),
            )
            .with_certificate(json!(gaps.iter().map(|(deg, a, b)| json!({"degree": deg, "dimJ": a, "dimI": b})).collect::<Vec<_>>())),
        );
        if let Some(&(deg, _, _)) = gaps.first() {
            out.push(Check::reported("gap-degree", deg.to_string()));
        }
        let gi = out.timed("generators", || i.minimal_generator_counts(d))?;
        let gj = out.timed("generators", || j.ideal.minimal_generator_counts(d))?;
        let diff = gi.total_min_generators() as i64 - gj.total_min_generators() as i64;
        out.push(
            Check::expect("generator-difference", "1", diff.to_string()).with_certificate(json!({
                "J": mingens(&gj),
                "I": mingens(&gi),
            })),
        );
        out.report("J", gj);
        out.report("I", gi);
        Ok(())
    }
}

/// `dim e(J_d) = dim e(I_d)` for B₃.
pub struct B3InvariantImages;

impl Target for B3InvariantImages {
    fn name(&self) -> &'static str {
        "b3-invariant-images"
    }

    fn summary(&self) -> &'static str {
        "the invariant parts of J and I agree degree by degree for B3"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        Ok(Parameters {
            type_label: Some(fixed_type(p, "B3")?),
            degree_bound: Some(bound(p, 10)?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let d = p.degree_bound.expect("resolved");
        let (rs, w) = system("B3", &None)?;
        let i = out.timed("ideal-i", || ideal_i(&rs))?;
        let j = out.timed("ideal-j", || ideal_j(&rs, &w, d))?;
        let ei = out.timed("invariants", || invariant_image_dims(&i, &w, Idempotent::Symmetrizer, None, d))?;
        let ej = out.timed("invariants", || invariant_image_dims(&j.ideal, &w, Idempotent::Symmetrizer, None, d))?;
        out.push(Check::expect("eI=eJ", dims(&ei.ideal_dims()), dims(&ej.ideal_dims())).with_certificate(json!({
            "eJ": ej.ideal_dims(),
            "eI": ei.ideal_dims(),
        })));
        out.report("eJ", ej);
        out.report("eI", ei);
        Ok(())
    }
}

/// `eΔI = eΔJ = ΔA` degree by degree, indexed by degree after dividing by `Δ`.
/// Runs G₂ and B₂ unless a type is given.
pub struct DeltaIdentity;

const DELTA_TYPES: [&str; 2] = ["G2", "B2"];

impl Target for DeltaIdentity {
    fn name(&self) -> &'static str {
        "delta-identity"
    }

    fn summary(&self) -> &'static str {
        "e(ΔI) = e(ΔJ) = ΔA degree by degree"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        if let Some(t) = &p.type_label {
            RootSystem::build(t)?;
        }
        Ok(Parameters {
            type_label: p.type_label.clone(),
            degree_bound: Some(bound(p, 10)?),
            realization: Some(validate_realization(p, "essential")?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let d = p.degree_bound.expect("resolved");
        let types: Vec<&str> = match &p.type_label {
            Some(t) => vec![t.as_str()],
            None => DELTA_TYPES.to_vec(),
        };
        for label in types {
            let (rs, w) = system(label, &p.realization)?;
            let disc = delta(&rs);
            let i = out.timed("ideal-i", || ideal_i(&rs))?;
            let j = out.timed("ideal-j", || ideal_j(&rs, &w, d))?;
            let edi =
                out.timed("invariants", || invariant_image_dims(&i, &w, Idempotent::Symmetrizer, Some(&disc), d))?;
            let edj = out
                .timed("invariants", || invariant_image_dims(&j.ideal, &w, Idempotent::Symmetrizer, Some(&disc), d))?;
            let da: Vec<usize> = (0..=d).map(|k| j.basis.dim_in_degree(k)).collect();
            out.push(Check::expect(format!("{label} eΔI=ΔA"), dims(&da), dims(&edi.ideal_dims())));
            out.push(Check::expect(format!("{label} eΔJ=ΔA"), dims(&da), dims(&edj.ideal_dims())));
            out.report(format!("{label} eΔI"), edi);
            out.report(format!("{label} eΔJ"), edj);
        }
        Ok(())
    }
}

/// `I = J` and `I² = I^(2)` in type A.
pub struct TypeAHaiman;

impl Target for TypeAHaiman {
    fn name(&self) -> &'static str {
        "typeA-haiman"
    }

    fn summary(&self) -> &'static str {
        "I = J and I^2 = I^(2) for A_n in n+1 coordinates"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        let n = p.n.unwrap_or(2);
        if !(1..=4).contains(&n) {
            return Err(VerifyError::Usage(format!("typeA-haiman supports n = 1..4, got {n}")));
        }
        Ok(Parameters {
            type_label: Some(fixed_type(p, &format!("A{n}"))?),
            n: Some(n),
            degree_bound: Some(bound(p, 8)?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let d = p.degree_bound.expect("resolved");
        let label = p.type_label.as_deref().expect("resolved");
        let (rs, w) = system(label, &None)?;
        let i = out.timed("ideal-i", || ideal_i(&rs))?;
        let j = out.timed("ideal-j", || ideal_j(&rs, &w, d))?;
        let v = out.timed("compare", || compare(label, ("J", &j.ideal), ("I", &i), d))?;
        out.relation = Some(v.relation);
        out.push(Check::expect("I=J", Relation::Equal.as_str(), v.relation.as_str()).with_certificate(&v.certificate));
        let sq = out.timed("powers", || i.power(2))?;
        let sym = out.timed("powers", || symbolic_power(&rs, 2))?;
        let v2 = out.timed("compare", || compare(label, ("I^2", &sq), ("I^(2)", &sym), d))?;
        out.push(Check::expect("I^2=I^(2)", Relation::Equal.as_str(), v2.relation.as_str()).with_certificate(&v2.certificate));
        Ok(())
    }
}

/// `I^d` against `I^(d)`; judged in type A, reported elsewhere. Runs B₂ and
/// G₂ unless a type is given.
pub struct SymbolicVsOrdinary;

const SYMBOLIC_TYPES: [&str; 2] = ["B2", "G2"];

impl Target for SymbolicVsOrdinary {
    fn name(&self) -> &'static str {
        "symbolic-vs-ordinary"
    }

    fn summary(&self) -> &'static str {
        "compare the ordinary power I^d with the symbolic power I^(d)"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        if let Some(t) = &p.type_label {
            RootSystem::build(t)?;
        }
        let d = p.d.unwrap_or(2);
        if d == 0 {
            return Err(VerifyError::Usage("power must be positive".into()));
        }
        Ok(Parameters {
            type_label: p.type_label.clone(),
            d: Some(d),
            degree_bound: Some(bound(p, 12)?),
            realization: Some(validate_realization(p, "ambient")?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let (d, sweep) = (p.d.expect("resolved"), p.degree_bound.expect("resolved"));
        let types: Vec<&str> = match &p.type_label {
            Some(t) => vec![t.as_str()],
            None => SYMBOLIC_TYPES.to_vec(),
        };
        let single = types.len() == 1;
        for label in types {
            let (rs, _) = system(label, &p.realization)?;
            let i = out.timed("ideal-i", || ideal_i(&rs))?;
            let ordinary = out.timed("powers", || i.power(d))?;
            let symbolic = out.timed("powers", || symbolic_power(&rs, d))?;
            let v = out.timed("compare", || compare(label, ("I^d", &ordinary), ("I^(d)", &symbolic), sweep))?;
            if single {
                out.relation = Some(v.relation);
            }
            let name = format!("{label} d={d} relation");
            let check = if label.starts_with(['A', 'a']) {
                Check::expect(name, Relation::Equal.as_str(), v.relation.as_str())
            } else {
                Check::reported(name, v.relation.as_str())
            };
            out.push(check.with_certificate(&v.certificate));
        }
        Ok(())
    }
}

/// Seeded Dunkl property suite.
pub struct DunklSuite;

const DUNKL_TYPES: [&str; 3] = ["A2", "B2", "G2"];

impl Target for DunklSuite {
    fn name(&self) -> &'static str {
        "dunkl"
    }

    fn summary(&self) -> &'static str {
        "Dunkl operators commute and satisfy the defining relation"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        if let Some(t) = &p.type_label {
            if t != "rank-one" {
                RootSystem::build(t)?;
            }
        }
        Ok(Parameters {
            type_label: p.type_label.clone(),
            c: Some(p.c.clone().unwrap_or_else(default_parameters)),
            seed: Some(p.seed.unwrap_or(1)),
            samples: Some(p.samples.unwrap_or(100).max(1)),
            realization: Some(validate_realization(p, "ambient")?),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let types: Vec<String> = match &p.type_label {
            Some(t) => vec![t.clone()],
            None => DUNKL_TYPES.iter().map(|s| s.to_string()).collect(),
        };
        let seed = p.seed.expect("resolved");
        let samples = p.samples.expect("resolved");
        for (ti, label) in types.iter().enumerate() {
            let rs = if label == "rank-one" {
                rank_one_system()
            } else {
                system(label, &p.realization)?.0
            };
            let ctx = DunklContext::new(&rs)?;
            for (ci, c) in p.c.as_ref().expect("resolved").iter().enumerate() {
                let s = seed.wrapping_add(1000 * ti as u64 + ci as u64);
                let results = out.timed(label, || run_suite(&ctx, c, s, samples))?;
                for r in results {
                    out.push(
                        Check::expect(
                            format!("{label} c={c} {}", r.property),
                            "holds",
                            if r.passed { "holds" } else { "fails" },
                        )
                        .with_witness(r.witness),
                    );
                }
            }
        }
        Ok(())
    }
}

/// Bipartition tables, heart classes and families.
pub struct CellsTarget;

impl Target for CellsTarget {
    fn name(&self) -> &'static str {
        "cells"
    }

    fn summary(&self) -> &'static str {
        "heart classes of tau(P(2,n)) match the families of type B_n"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        let n = p.n.unwrap_or(3);
        if n > MAX_TABLE_N {
            return Err(VerifyError::Usage(format!("cells supports n ≤ {MAX_TABLE_N}, got {n}")));
        }
        Ok(Parameters {
            n: Some(n),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let n = p.n.expect("resolved");
        let table = out.timed("table", || CellsTable::build(n));
        if n == 0 {
            out.push(Check::expect("rows", "0", table.rows.len().to_string()));
            return Ok(());
        }
        let classes = j_classes(n);
        let fams = families(n);
        out.push(Check::expect(
            "family-class-correspondence",
            "true",
            check_family_class_correspondence(n).to_string(),
        ));
        out.push(Check::expect("family-count", classes.len().to_string(), fams.len().to_string()));
        out.push(Check::reported(
            "swapped-convention-correspondence",
            check_family_class_correspondence_with(n, RunnerConvention::LambdaEven).to_string(),
        ));
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        if n == 3 {
            out.push(Check::expect("rows", "10", table.rows.len().to_string()));
            out.push(Check::expect("distinct-hearts", "6", table.distinct_hearts().to_string()));
            out.push(Check::expect("class-sizes", "[1, 1, 1, 1, 3, 3]", dims(&sizes)));
        } else {
            out.push(Check::reported("class-sizes", dims(&sizes)));
        }
        out.push(Check::reported("table", format!("{} rows", table.rows.len())).with_certificate(&table));
        Ok(())
    }
}

/// `J^k = I^k = I^(k)` for A₁ and the rank-one symbol identities.
pub struct RankOneChain;

impl Target for RankOneChain {
    fn name(&self) -> &'static str {
        "rank-one-chain"
    }

    fn summary(&self) -> &'static str {
        "J^k = I^k = I^(k) for A1 and top symbols of x^i D^j x^k"
    }

    fn resolve(&self, p: &Parameters) -> Result<Parameters, VerifyError> {
        let k = p.d.unwrap_or(3);
        if !(1..=6).contains(&k) {
            return Err(VerifyError::Usage(format!("rank-one-chain supports k = 1..6, got {k}")));
        }
        Ok(Parameters {
            type_label: Some(fixed_type(p, "A1")?),
            d: Some(k),
            c: Some(p.c.clone().unwrap_or_else(default_parameters)),
            ..Default::default()
        })
    }

    fn execute(&self, p: &Parameters, out: &mut Outcome) -> Result<(), VerifyError> {
        let kmax = p.d.expect("resolved");
        let (rs, w) = system("A1", &None)?;
        let i = ideal_i(&rs)?;
        let j = ideal_j(&rs, &w, 2)?;
        for k in 1..=kmax {
            let (jk, ik) = (j.ideal.power(k)?, i.power(k)?);
            let sym: Ideal = symbolic_power(&rs, k)?;
            let rel = |a: &Ideal, b: &Ideal| -> Result<&'static str, VerifyError> {
                Ok(if a.equals(b)? { "equal" } else { "different" })
            };
            let first = out.timed("powers", || rel(&jk, &ik))?;
            let second = out.timed("powers", || rel(&ik, &sym))?;
            out.push(Check::expect(format!("k={k} J^k=I^k"), "equal", first));
            out.push(Check::expect(format!("k={k} I^k=I^(k)"), "equal", second));
        }
        for c in p.c.as_ref().expect("resolved") {
            let checks = rank_one_symbol_checks(c, kmax);
            let bad = checks.iter().find(|ch| !ch.passed);
            out.push(
                Check::expect(format!("c={c} top symbols"), "match", if bad.is_none() { "match" } else { "differ" })
                    .with_witness(bad.map(|b| format!("x^{} D^{} x^{}: {:?}", b.i, b.j, b.k, b.symbol))),
            );
        }
        Ok(())
    }
}
