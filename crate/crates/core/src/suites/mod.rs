//! Named verification suites, registered in a static table and selected by
//! name at runtime.

use std::time::{Duration, Instant};

use serde::Serialize;

mod examples;
mod sweeps;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u128,
    pub time_limit_ms: Option<u128>,
    pub passed: bool,
}

/// Accumulates checks for one suite run.
#[derive(Default)]
pub struct Checks(Vec<CheckResult>);

impl Checks {
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records an error as a failed check.
    pub fn check_result<T>(&mut self, name: &str, r: crate::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(name, false, e.to_string());
                None
            }
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn time_limit(&self) -> Option<Duration>;
    fn run(&self, checks: &mut Checks);
}

static REGISTRY: &[&dyn Suite] = &[
    &sweeps::TypeACycles,
    &sweeps::Carter,
    &examples::G2TwoOrbits,
    &examples::D4QuasiCoxeter,
    &examples::B4Embedding,
    &sweeps::OrbitSubgroupCount,
    &sweeps::SubgroupLength,
    &sweeps::Transitivity,
    &sweeps::Uniqueness,
    &sweeps::QuasiCoxeterIndecomposable,
    &sweeps::StructuralCounts,
];

pub fn registry() -> &'static [&'static dyn Suite] {
    REGISTRY
}

pub fn find(name: &str) -> Option<&'static dyn Suite> {
    REGISTRY.iter().copied().find(|s| s.name() == name)
}

/// Runs a suite, timing it; a suite passes when every check passes within
/// its time limit.
pub fn run(suite: &dyn Suite) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Checks::default();
    suite.run(&mut checks);
    let elapsed = start.elapsed();
    if checks.0.is_empty() {
        checks.check("ran", false, "suite produced no checks");
    }
    let within = suite.time_limit().is_none_or(|limit| elapsed <= limit);
    let passed = within && checks.0.iter().all(|c| c.passed);
    SuiteReport {
        suite: suite.name().to_string(),
        checks: checks.0,
        elapsed_ms: elapsed.as_millis(),
        time_limit_ms: suite.time_limit().map(|d| d.as_millis()),
        passed,
    }
}
