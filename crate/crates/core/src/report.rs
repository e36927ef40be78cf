//! Pass/fail bookkeeping shared by all verification suites.

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub relation: String,
    pub instance: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, relation: impl Into<String>, instance: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            relation: relation.into(),
            instance: instance.into(),
            passed,
            detail: None,
        });
    }

    /// Records an error as a failed check.
    pub fn record_error(
        &mut self,
        relation: impl Into<String>,
        instance: impl Into<String>,
        err: &crate::Error,
    ) {
        self.checks.push(Check {
            relation: relation.into(),
            instance: instance.into(),
            passed: false,
            detail: Some(err.to_string()),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn total(&self) -> usize {
        self.checks.len()
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        let first = self.first_failure().map(|c| {
            json!({
                "relation": c.relation,
                "instance": c.instance,
                "detail": c.detail,
            })
        });
        json!({
            "suite": self.suite,
            "checks": self.total(),
            "failures": self.failures(),
            "passed": self.passed(),
            "first_failure": first,
        })
    }

    /// One line per relation name with counts.
    pub fn summary(&self) -> String {
        let mut names: Vec<&str> = Vec::new();
        for c in &self.checks {
            if !names.contains(&c.relation.as_str()) {
                names.push(&c.relation);
            }
        }
        let mut out = format!(
            "suite {}: {} checks, {} failures\n",
            self.suite,
            self.total(),
            self.failures()
        );
        for name in names {
            let all: Vec<&Check> = self.checks.iter().filter(|c| c.relation == name).collect();
            let bad = all.iter().filter(|c| !c.passed).count();
            let status = if bad == 0 { "ok" } else { "FAIL" };
            out.push_str(&format!("  {status:4} {name} ({} instances", all.len()));
            if bad > 0 {
                out.push_str(&format!(", {bad} failed"));
            }
            out.push_str(")\n");
        }
        out
    }
}
