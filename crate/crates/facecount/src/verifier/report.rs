//! Machine-readable results of a verification suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One claim violation: the grid point, what the claim demanded, and what the
/// computation produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub point: String,
    pub expected: String,
    pub actual: String,
}

/// The outcome of running one check suite over a parameter grid.
///
/// A report is deterministic: for a fixed grid, the same failures, witnesses
/// and notes appear in the same order, regardless of worker count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Stable identifier of the claim being checked.
    pub claim_id: String,
    /// Human-readable description of the parameter ranges, keyed by name.
    pub grid: BTreeMap<String, String>,
    /// Number of grid points evaluated.
    pub points_checked: u64,
    /// Empty exactly when the suite passed.
    pub failures: Vec<Failure>,
    /// Grid points where a non-strict inequality held with equality. Always
    /// recorded, so tightness statements are corroborated by the same run.
    pub equality_witnesses: Vec<String>,
    /// Free-form observations that are neither failures nor witnesses.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub(crate) fn new(claim_id: &str) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            grid: BTreeMap::new(),
            points_checked: 0,
            failures: Vec::new(),
            equality_witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn grid_entry(&mut self, key: &str, value: String) {
        self.grid.insert(key.to_string(), value);
    }

    pub(crate) fn fail(&mut self, point: String, expected: String, actual: String) {
        self.failures.push(Failure {
            point,
            expected,
            actual,
        });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Serialize the full report as pretty-printed JSON with stable key
    /// order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// A human-readable Markdown summary: verdict, grid, and full failure,
    /// witness and note listings.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "## {} — {}", self.claim_id, verdict);
        let _ = writeln!(out);
        for (k, v) in &self.grid {
            let _ = writeln!(out, "- grid {k}: {v}");
        }
        let _ = writeln!(out, "- points checked: {}", self.points_checked);
        let _ = writeln!(out, "- failures: {}", self.failures.len());
        let _ = writeln!(out, "- equality witnesses: {}", self.equality_witnesses.len());
        if !self.failures.is_empty() {
            let _ = writeln!(out);
            let _ = writeln!(out, "### Failures");
            for f in &self.failures {
                let _ = writeln!(
                    out,
                    "- at {}: expected {}, got {}",
                    f.point, f.expected, f.actual
                );
            }
        }
        if !self.equality_witnesses.is_empty() {
            let _ = writeln!(out);
            let _ = writeln!(out, "### Equality witnesses");
            for w in &self.equality_witnesses {
                let _ = writeln!(out, "- {w}");
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out);
            let _ = writeln!(out, "### Notes");
            for n in &self.notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let mut r = CheckReport::new("demo");
        r.grid_entry("d", "2..=5".into());
        r.points_checked = 7;
        r.fail("d=3".into(), "1".into(), "2".into());
        r.equality_witnesses.push("d=4".into());
        r.notes.push("checked by hand".into());
        let back: CheckReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r, "JSON round trip preserves the report");
        assert!(!r.passed(), "a report with failures has not passed");
    }

    #[test]
    fn markdown_contains_verdict_and_failures() {
        let mut r = CheckReport::new("demo");
        r.points_checked = 1;
        let md = r.to_markdown();
        assert!(md.contains("demo — PASS"), "passing verdict shown");
        r.fail("d=3".into(), "1".into(), "2".into());
        let md = r.to_markdown();
        assert!(md.contains("demo — FAIL"), "failing verdict shown");
        assert!(md.contains("expected 1, got 2"), "failure line shown");
    }
}
