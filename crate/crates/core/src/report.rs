//! Structured verdicts shared by the library checks and the CLI.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Index of the failing sample under the run seed, when sampled.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sample: Option<u64>,
    pub detail: String,
    pub inputs: BTreeMap<String, Value>,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>) -> Self {
        Counterexample { sample: None, detail: detail.into(), inputs: BTreeMap::new() }
    }

    pub fn sample(mut self, index: u64) -> Self {
        self.sample = Some(index);
        self
    }

    pub fn with<T: Serialize + ?Sized>(mut self, name: &str, value: &T) -> Self {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.inputs.insert(name.to_string(), v);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub samples: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
}

/// Accumulates outcomes for one named property; keeps the first failure.
#[derive(Debug)]
pub struct Check {
    name: String,
    samples: u64,
    failed: bool,
    failure: Option<Counterexample>,
    note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), samples: 0, failed: false, failure: None, note: None }
    }

    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.samples += 1;
        if !ok && !self.failed {
            self.failed = true;
            self.failure = Some(counterexample());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn passed(&self) -> bool {
        !self.failed
    }

    pub fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            passed: !self.failed,
            samples: self.samples,
            note: self.note,
            counterexample: self.failure,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub config: Option<Value>,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(suite: impl Into<String>, anchor: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            anchor: anchor.into(),
            config: None,
            passed: true,
            checks: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        let r = check.finish();
        self.passed &= r.passed;
        self.checks.push(r);
    }

    pub fn push_result(&mut self, r: CheckResult) {
        self.passed &= r.passed;
        self.checks.push(r);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Names of failing checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}
