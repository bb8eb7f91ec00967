//! Named verification targets behind a common trait, selected at runtime
//! from a registry, and the reports they produce.

mod targets;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::diagideals::Relation;
use crate::dunkl::DunklError;
use crate::groebner::{guard, GradedReport, GroebnerError};
use crate::rational::Rational;
use crate::weyl::WeylError;

pub use targets::{
    CellsTarget, DeltaIdentity, DunklSuite, G2IdealEquality, B3InvariantImages, B3StrictInclusion, RankOneChain,
    SymbolicVsOrdinary, TypeAHaiman,
};

/// Version of the run document layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// An open computation: the outcome is recorded, not judged.
    Reported,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

/// One judged (or reported) fact with its supporting data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<String>,
    pub observed: String,
    #[serde(skip_serializing_if = "serde_json::Value::is_null", default)]
    pub certificate: serde_json::Value,
    /// Failing sample, serialized.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Check {
    /// A check judged by comparing `observed` against `expected`.
    pub fn expect(name: impl Into<String>, expected: impl Into<String>, observed: impl Into<String>) -> Self {
        let (expected, observed) = (expected.into(), observed.into());
        Self {
            name: name.into(),
            status: if expected == observed { Status::Pass } else { Status::Fail },
            expected: Some(expected),
            observed,
            certificate: serde_json::Value::Null,
            witness: None,
        }
    }

    pub fn reported(name: impl Into<String>, observed: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Reported,
            expected: None,
            observed: observed.into(),
            certificate: serde_json::Value::Null,
            witness: None,
        }
    }

    pub fn with_certificate(mut self, cert: impl Serialize) -> Self {
        self.certificate = serde_json::to_value(cert).expect("certificate serializes");
        self
    }

    pub fn with_witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }
}

/// Inputs of a run. Targets fill in their defaults before running, so the
/// recorded parameters reproduce the run.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Parameters {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none", default)]
    pub type_label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub realization: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationRun {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub target: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub relation: Option<Relation>,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub reports: Vec<GradedReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl VerificationRun {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("run serializes");
        s.push('\n');
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("target\tcheck\tstatus\texpected\tobserved\twitness\n");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                self.target,
                c.name,
                c.status.as_str(),
                c.expected.as_deref().unwrap_or("-"),
                c.observed,
                c.witness.as_deref().unwrap_or("-")
            );
        }
        for r in &self.reports {
            let _ = writeln!(out, "# report\t{}", r.label);
            out.push_str(&r.to_tsv());
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.target, self.status.as_str());
        if let Some(r) = self.relation {
            let _ = writeln!(out, "  relation: {}", r.as_str());
        }
        for c in &self.checks {
            let _ = write!(out, "  [{}] {}: {}", c.status.as_str(), c.name, c.observed);
            if let Some(e) = &c.expected {
                let _ = write!(out, " (expected {e})");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "    witness: {w}");
            }
        }
        for r in &self.reports {
            let dims: Vec<String> = r.rows.iter().map(|row| row.ideal_dim.to_string()).collect();
            let _ = writeln!(out, "  {}: dims [{}]", r.label, dims.join(", "));
            if r.rows.iter().any(|row| row.min_generators.is_some()) {
                let gens: Vec<String> =
                    r.rows.iter().map(|row| row.min_generators.unwrap_or(0).to_string()).collect();
                let _ = writeln!(out, "  {}: minimal generators [{}]", r.label, gens.join(", "));
            }
        }
        if let Some(t) = &self.timings {
            for (k, v) in t {
                let _ = writeln!(out, "  time {k}: {v:.3}s");
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("resource limit: {0}")]
    ResourceAbort(String),
    #[error("computation failed: {0}")]
    Computation(String),
}

impl VerifyError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifyError::Usage(_) => 64,
            VerifyError::ResourceAbort(_) => 2,
            VerifyError::Computation(_) => 1,
        }
    }
}

impl From<GroebnerError> for VerifyError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::ResourceLimit(m) => VerifyError::ResourceAbort(m),
            other => VerifyError::Computation(other.to_string()),
        }
    }
}

impl From<WeylError> for VerifyError {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::GroupTooLarge(_) => VerifyError::ResourceAbort(e.to_string()),
            WeylError::UnsupportedLabel(_) | WeylError::InvalidSpec(_) => VerifyError::Usage(e.to_string()),
            other => VerifyError::Computation(other.to_string()),
        }
    }
}

impl From<DunklError> for VerifyError {
    fn from(e: DunklError) -> Self {
        match e {
            DunklError::Weyl(w) => w.into(),
            other => VerifyError::Computation(other.to_string()),
        }
    }
}

/// Collects the results of one target run.
#[derive(Debug, Default)]
pub struct Outcome {
    pub relation: Option<Relation>,
    pub checks: Vec<Check>,
    pub reports: Vec<GradedReport>,
    pub timings: BTreeMap<String, f64>,
}

impl Outcome {
    /// Runs `f`, recording its wall-clock time under `phase`.
    pub fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.timings.entry(phase.to_string()).or_insert(0.0) += start.elapsed().as_secs_f64();
        out
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn report(&mut self, label: impl Into<String>, mut report: GradedReport) {
        report.label = label.into();
        self.reports.push(report);
    }
}

/// A verification pipeline selectable by name.
pub trait Target: Send + Sync {
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;

    /// Validates the parameters and fills in defaults.
    fn resolve(&self, params: &Parameters) -> Result<Parameters, VerifyError>;

    fn execute(&self, params: &Parameters, out: &mut Outcome) -> Result<(), VerifyError>;
}

/// Targets by name.
pub struct TargetRegistry {
    targets: BTreeMap<&'static str, Box<dyn Target>>,
}

impl Default for TargetRegistry {
    fn default() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(G2IdealEquality));
        r.register(Box::new(B3StrictInclusion));
        r.register(Box::new(B3InvariantImages));
        r.register(Box::new(TypeAHaiman));
        r.register(Box::new(SymbolicVsOrdinary));
        r.register(Box::new(DunklSuite));
        r.register(Box::new(CellsTarget));
        r.register(Box::new(DeltaIdentity));
        r.register(Box::new(RankOneChain));
        r
    }
}

impl TargetRegistry {
    pub fn empty() -> Self {
        Self {
            targets: BTreeMap::new(),
        }
    }

    /// Adds a target, replacing any target of the same name.
    pub fn register(&mut self, target: Box<dyn Target>) {
        self.targets.insert(target.name(), target);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Target> {
        self.targets.get(name).map(Box::as_ref)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.targets.keys().copied().collect()
    }

    pub fn summaries(&self) -> Vec<(&'static str, &'static str)> {
        self.targets.values().map(|t| (t.name(), t.summary())).collect()
    }

    /// Runs one target under the configured wall-clock budget.
    pub fn run(&self, name: &str, params: &Parameters, timings: bool) -> Result<VerificationRun, VerifyError> {
        let target = self
            .get(name)
            .ok_or_else(|| VerifyError::Usage(format!("unknown target `{name}`; known: {}", self.names().join(", "))))?;
        let resolved = target.resolve(params)?;
        let mut out = Outcome::default();
        let start = Instant::now();
        guard::with_budget(guard::limits().budget, || target.execute(&resolved, &mut out))?;
        let status = if out.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if out.checks.iter().any(|c| c.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Reported
        };
        let timings = timings.then(|| {
            let mut t = std::mem::take(&mut out.timings);
            t.insert("total".into(), start.elapsed().as_secs_f64());
            t
        });
        Ok(VerificationRun {
            schema_version: SCHEMA_VERSION,
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            target: name.to_string(),
            status,
            relation: out.relation,
            parameters: resolved,
            checks: out.checks,
            reports: out.reports,
            timings,
        })
    }

    /// Runs several targets on up to `jobs` threads; results keep the input
    /// order.
    pub fn run_many(
        &self,
        names: &[String],
        params: &Parameters,
        jobs: usize,
        timings: bool,
    ) -> Vec<Result<VerificationRun, VerifyError>> {
        let next = AtomicUsize::new(0);
        let results: Vec<Mutex<Option<Result<VerificationRun, VerifyError>>>> =
            names.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|s| {
            for _ in 0..jobs.clamp(1, names.len().max(1)) {
                s.spawn(|| loop {
                    let k = next.fetch_add(1, Ordering::SeqCst);
                    if k >= names.len() {
                        break;
                    }
                    let r = self.run(&names[k], params, timings);
                    *results[k].lock().expect("result slot") = Some(r);
                });
            }
        });
        results
            .into_iter()
            .map(|m| m.into_inner().expect("result slot").expect("every target ran"))
            .collect()
    }
}

/// Exit code for a batch: the most severe outcome wins.
pub fn exit_code(results: &[Result<VerificationRun, VerifyError>]) -> i32 {
    let mut code = 0;
    for r in results {
        let c = match r {
            Ok(run) if run.status == Status::Fail => 1,
            Ok(_) => 0,
            Err(e) => e.exit_code(),
        };
        code = match (code, c) {
            (64, _) | (_, 64) => 64,
            (a, b) => a.max(b),
        };
    }
    code
}
