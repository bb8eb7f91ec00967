//! Resource limits for Gröbner computations.
//!
//! Limits are process-wide; the wall-clock deadline is per thread so that
//! concurrently running verification targets each get their own budget.

use std::cell::Cell;
use std::sync::RwLock;
use std::time::{Duration, Instant};

use super::GroebnerError;

/// Environment variable overriding the defaults, e.g.
/// `ROOTIDEALS_GUARD="basis=50000,degree=64,seconds=600"`.
pub const GUARD_ENV: &str = "ROOTIDEALS_GUARD";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceLimits {
    pub max_basis: usize,
    pub max_degree: u32,
    /// Default wall-clock budget applied by [`with_budget`] callers.
    pub budget: Option<Duration>,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        Self {
            max_basis: 20_000,
            max_degree: 64,
            budget: Some(Duration::from_secs(30 * 60)),
        }
    }
}

impl ResourceLimits {
    /// Parses `key=value` pairs separated by commas. Unknown keys are errors.
    pub fn parse(spec: &str) -> Result<Self, String> {
        let mut out = Self::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let bad = |_| format!("invalid value for `{k}`: `{v}`");
            match k.trim() {
                "basis" => out.max_basis = v.trim().parse().map_err(bad)?,
                "degree" => out.max_degree = v.trim().parse().map_err(bad)?,
                "seconds" => {
                    let s: u64 = v.trim().parse().map_err(bad)?;
                    out.budget = (s > 0).then(|| Duration::from_secs(s));
                }
                other => return Err(format!("unknown guard key `{other}`")),
            }
        }
        Ok(out)
    }

    pub fn from_env() -> Result<Self, String> {
        match std::env::var(GUARD_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}

static LIMITS: RwLock<Option<ResourceLimits>> = RwLock::new(None);

thread_local! {
    static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
}

pub fn limits() -> ResourceLimits {
    LIMITS.read().ok().and_then(|g| *g).unwrap_or_default()
}

pub fn set_limits(l: ResourceLimits) {
    if let Ok(mut g) = LIMITS.write() {
        *g = Some(l);
    }
}

/// Runs `f` with a wall-clock deadline on the current thread.
pub fn with_budget<T>(budget: Option<Duration>, f: impl FnOnce() -> T) -> T {
    let prev = DEADLINE.with(|d| d.get());
    let new = budget.map(|b| Instant::now() + b);
    let effective = match (prev, new) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    DEADLINE.with(|d| d.set(effective));
    let out = f();
    DEADLINE.with(|d| d.set(prev));
    out
}

pub(crate) fn check(basis_len: usize, degree: u32) -> Result<(), GroebnerError> {
    let l = limits();
    if basis_len > l.max_basis {
        return Err(GroebnerError::ResourceLimit(format!(
            "basis size {basis_len} exceeds limit {}",
            l.max_basis
        )));
    }
    if degree > l.max_degree {
        return Err(GroebnerError::ResourceLimit(format!(
            "degree {degree} exceeds limit {}",
            l.max_degree
        )));
    }
    if let Some(deadline) = DEADLINE.with(|d| d.get()) {
        if Instant::now() > deadline {
            return Err(GroebnerError::ResourceLimit("wall-clock budget exhausted".into()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_spec() {
        let l = ResourceLimits::parse("basis=10, degree=5,seconds=0").unwrap();
        assert_eq!(l.max_basis, 10);
        assert_eq!(l.max_degree, 5);
        assert_eq!(l.budget, None);
        assert!(ResourceLimits::parse("speed=3").is_err());
        assert!(ResourceLimits::parse("basis").is_err());
    }

    #[test]
    fn expired_deadline_trips() {
        let r = with_budget(Some(Duration::from_nanos(1)), || {
            std::thread::sleep(Duration::from_millis(2));
            check(1, 1)
        });
        assert!(matches!(r, Err(GroebnerError::ResourceLimit(_))));
        assert!(check(1, 1).is_ok());
    }
}
