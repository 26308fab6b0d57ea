use serde::Serialize;

use super::{RunConfig, Suite};

/// One verified statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    /// The identity or property being checked.
    pub anchor: String,
    /// The computed exact value, rationals as `p/q`.
    pub value: String,
    /// What the value is compared against.
    pub expected: String,
    pub passed: bool,
}

impl Check {
    /// Passes iff the two renderings agree; callers render canonically.
    pub fn equal(id: impl Into<String>, anchor: impl Into<String>, value: String, expected: String) -> Self {
        let passed = value == expected;
        Check {
            id: id.into(),
            anchor: anchor.into(),
            value,
            expected,
            passed,
        }
    }

    /// Passes iff no sample failed.
    pub fn sampled(id: impl Into<String>, anchor: impl Into<String>, failures: usize, samples: usize) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            value: format!("{failures} failures in {samples} samples"),
            expected: format!("0 failures in {samples} samples"),
            passed: failures == 0 && samples > 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    #[serde(rename = "type")]
    pub kind: Option<String>,
    pub degree: Option<usize>,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: Suite, cfg: &RunConfig, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|x, y| x.id.cmp(&y.id));
        let failed = checks.iter().filter(|c| !c.passed).count();
        Report {
            suite: suite.name().to_string(),
            seed: cfg.seed,
            kind: cfg.kind.map(|k| k.to_string()),
            degree: cfg.degree,
            passed: failed == 0,
            total: checks.len(),
            failed,
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}  [{}]\n", c.id, c.anchor));
            out.push_str(&format!("     value:    {}\n", c.value));
            if !c.passed {
                out.push_str(&format!("     expected: {}\n", c.expected));
            }
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed (seed {})\n",
            self.suite,
            self.total - self.failed,
            self.total,
            self.seed
        ));
        out
    }
}
