//! Suite reports: one check per (condition, input), rendered as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use invsegal::segal::Witness;
use serde::Serialize;
use serde_json::Value;

use crate::inputs::InputDigest;

pub const SCHEMA: &str = "invsegal-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub passed: bool,
    pub summary: String,
    /// Flags that rerun just this check, present on failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproduce: Option<String>,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, passed: bool, summary: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            input: None,
            passed,
            summary: summary.into(),
            reproduce: None,
            detail: Value::Null,
            elapsed_ms: None,
        }
    }

    pub fn input(mut self, name: &str) -> Self {
        self.input = Some(name.to_string());
        self
    }

    pub fn detail(mut self, detail: impl Serialize) -> Self {
        self.detail = serde_json::to_value(detail).expect("reports serialize");
        self
    }

    /// Attach the reproduction command, kept only if the check failed.
    pub fn reproduce(mut self, command: impl FnOnce() -> String) -> Self {
        if !self.passed {
            self.reproduce = Some(command());
        }
        self
    }
}

/// Run `f`, recording its wall time on the result when `timings` is set.
pub fn timed(timings: bool, f: impl FnOnce() -> CheckResult) -> CheckResult {
    let started = Instant::now();
    let mut result = f();
    if timings {
        result.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    result
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub schema: &'static str,
    pub suite: String,
    pub bounds: BTreeMap<String, usize>,
    pub inputs: Vec<InputDigest>,
    pub checks: Vec<CheckResult>,
    /// Inputs the suite does not apply to, with the reason.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skipped>,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Skipped {
    pub input: String,
    pub reason: String,
}

impl SuiteResult {
    pub fn new(suite: &str) -> Self {
        Self {
            schema: SCHEMA,
            suite: suite.to_string(),
            bounds: BTreeMap::new(),
            inputs: Vec::new(),
            checks: Vec::new(),
            skipped: Vec::new(),
            passed: true,
        }
    }

    pub fn bound(mut self, name: &str, value: usize) -> Self {
        self.bounds.insert(name.to_string(), value);
        self
    }

    pub fn push(&mut self, check: CheckResult) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckResult>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn skip(&mut self, input: &str, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            input: input.to_string(),
            reason: reason.into(),
        });
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            if let Some(input) = &c.input {
                let _ = write!(out, " [{input}]");
            }
            let _ = write!(out, ": {}", c.summary);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, " ({ms:.1} ms)");
            }
            out.push('\n');
            if let Some(r) = &c.reproduce {
                let _ = writeln!(out, "    reproduce: invsegal {r}");
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "SKIP [{}]: {}", s.input, s.reason);
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{}: {passed}/{} checks passed", self.suite, self.checks.len());
        out
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }
}

pub fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::Collision {
            level,
            first_label,
            second_label,
            image,
            ..
        } => format!("level {level}: {first_label} and {second_label} have the same edges {image:?}"),
        Witness::Unhit { level, labels, .. } => {
            format!("level {level}: no simplex has edges ({})", labels.join(", "))
        }
        Witness::NotReduced { size, .. } => format!("level 0 has {size} elements, not one"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_set_the_suite_verdict() {
        let mut suite = SuiteResult::new("demo");
        suite.push(CheckResult::new("a", true, "fine").reproduce(|| "unused".into()));
        assert!(suite.passed);
        assert!(suite.checks[0].reproduce.is_none());
        suite.push(CheckResult::new("b", false, "broken").reproduce(|| "demo --nmax 2".into()));
        assert!(!suite.passed);
        let text = suite.to_text();
        assert!(text.contains("FAIL b: broken"));
        assert!(text.contains("reproduce: invsegal demo --nmax 2"));
        assert!(text.ends_with("demo: 1/2 checks passed\n"));
    }

    #[test]
    fn json_omits_timings_unless_recorded() {
        let mut suite = SuiteResult::new("demo");
        suite.push(timed(false, || CheckResult::new("a", true, "fine")));
        assert!(!suite.to_json().contains("elapsed_ms"));
        suite.push(timed(true, || CheckResult::new("b", true, "fine")));
        assert!(suite.to_json().contains("elapsed_ms"));
    }
}
