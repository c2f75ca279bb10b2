//! The acceptance checks, grouped by criterion. Each check draws from its
//! own seeded generator, so results do not depend on which checks a filter
//! selects. Timings are kept out of the serialized summary.

mod checks;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::report::Real;

pub const DEFAULT_SEED: u64 = 0x0e1d_5eed;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub filter: Option<String>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { filter: None, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Measurement {
    pub name: String,
    pub value: Real,
}

/// Collects the measured values and failed requirements of one check.
#[derive(Debug, Default)]
pub struct Probe {
    measurements: Vec<Measurement>,
    failures: Vec<String>,
}

impl Probe {
    pub fn record(&mut self, name: impl Into<String>, value: f64) {
        self.measurements.push(Measurement { name: name.into(), value: Real(value) });
    }

    pub fn require(&mut self, ok: bool, msg: impl Into<String>) -> bool {
        if !ok {
            self.failures.push(msg.into());
        }
        ok
    }

    pub fn attempt<T, E: std::fmt::Display>(&mut self, what: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

type CheckFn = fn(&mut ChaCha8Rng, &mut Probe);

pub struct CheckDef {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    run: CheckFn,
}

impl CheckDef {
    fn selected(&self, filter: Option<&str>) -> bool {
        match filter {
            None => true,
            Some(f) => {
                let f = f.to_ascii_lowercase();
                self.tags.iter().any(|t| *t == f) || self.name.contains(&f)
            }
        }
    }
}

pub struct CriterionDef {
    pub number: u8,
    pub title: &'static str,
    pub runtime_limit: Duration,
    pub checks: &'static [CheckDef],
}

#[derive(Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    pub passed: bool,
    pub measurements: Vec<Measurement>,
    pub failures: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CriterionOutcome {
    pub number: u8,
    pub title: &'static str,
    pub passed: bool,
    pub runtime_limit_s: f64,
    pub checks: Vec<CheckOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CriterionOutcome {
    pub fn within_time(&self) -> bool {
        self.elapsed.as_secs_f64() < self.runtime_limit_s
    }

    /// `criterion N: PASS|FAIL title (elapsed / limit)` plus the failed checks.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "criterion {:>2}: {} {} ({:.2} s / {} s)",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed.as_secs_f64(),
            self.runtime_limit_s
        );
        for check in self.checks.iter().filter(|c| !c.passed) {
            line.push_str(&format!("\n    {}: {}", check.name, check.failures.join("; ")));
        }
        line
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteOutcome {
    pub seed: u64,
    pub filter: Option<String>,
    pub passed: bool,
    pub criteria: Vec<CriterionOutcome>,
}

pub fn criteria() -> &'static [CriterionDef] {
    &checks::CRITERIA
}

/// Runs the selected checks of one criterion; `None` if the filter selects
/// none of them.
pub fn run_criterion(number: u8, cfg: &SuiteConfig) -> Option<CriterionOutcome> {
    let def = criteria().iter().find(|c| c.number == number)?;
    let start = Instant::now();
    let mut outcomes = Vec::new();
    for (i, check) in def.checks.iter().enumerate() {
        if !check.selected(cfg.filter.as_deref()) {
            continue;
        }
        let stream = u64::from(def.number) * 1000 + i as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut probe = Probe::default();
        (check.run)(&mut rng, &mut probe);
        outcomes.push(CheckOutcome {
            name: check.name,
            tags: check.tags,
            passed: probe.failures.is_empty(),
            measurements: probe.measurements,
            failures: probe.failures,
        });
    }
    if outcomes.is_empty() {
        return None;
    }
    Some(CriterionOutcome {
        number: def.number,
        title: def.title,
        passed: outcomes.iter().all(|c| c.passed),
        runtime_limit_s: def.runtime_limit.as_secs_f64(),
        checks: outcomes,
        elapsed: start.elapsed(),
    })
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteOutcome {
    let criteria: Vec<_> = criteria().iter().filter_map(|c| run_criterion(c.number, cfg)).collect();
    SuiteOutcome {
        seed: cfg.seed,
        filter: cfg.filter.clone(),
        passed: !criteria.is_empty() && criteria.iter().all(|c| c.passed),
        criteria,
    }
}
