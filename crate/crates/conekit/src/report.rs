//! Machine-readable report schema shared by the reproduction pipelines and
//! the command-line interface. Key order is fixed by struct declaration, so
//! serialized reports are byte-stable for regression diffing.

use serde::{Deserialize, Serialize};

/// One check inside a reproduction: an expected and a computed quantity with
/// a tolerance. Boolean checks encode as 0/1 with tolerance 0.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReproCheck {
    pub label: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ReproCheck {
    pub fn value(label: &str, expected: f64, computed: f64, tolerance: f64) -> Self {
        let pass = (computed - expected).abs() <= tolerance;
        ReproCheck { label: label.into(), expected, computed, tolerance, pass }
    }

    /// `computed >= expected - tolerance`.
    pub fn at_least(label: &str, expected: f64, computed: f64, tolerance: f64) -> Self {
        let pass = computed >= expected - tolerance;
        ReproCheck { label: label.into(), expected, computed, tolerance, pass }
    }

    /// `computed <= expected + tolerance`.
    pub fn at_most(label: &str, expected: f64, computed: f64, tolerance: f64) -> Self {
        let pass = computed <= expected + tolerance;
        ReproCheck { label: label.into(), expected, computed, tolerance, pass }
    }

    pub fn boolean(label: &str, ok: bool) -> Self {
        ReproCheck {
            label: label.into(),
            expected: 1.0,
            computed: if ok { 1.0 } else { 0.0 },
            tolerance: 0.0,
            pass: ok,
        }
    }
}

/// A reproduction report: named checks plus the conjunction flag.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReproReport {
    pub name: String,
    pub checks: Vec<ReproCheck>,
    pub overall: bool,
}

impl ReproReport {
    pub fn new(name: &str, checks: Vec<ReproCheck>) -> Self {
        let overall = checks.iter().all(|c| c.pass);
        ReproReport { name: name.into(), checks, overall }
    }
}

/// One result object of a CLI report.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ResultEntry {
    pub label: String,
    pub value: f64,
    pub threshold: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    pub paper_anchor: String,
}

/// Top-level CLI report. `inputs` echoes the request; `seed` and `version`
/// pin reproducibility.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportFile {
    pub command: String,
    pub inputs: serde_json::Value,
    pub results: Vec<ResultEntry>,
    pub seed: u64,
    pub version: String,
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Converts a reproduction report into CLI result entries.
pub fn repro_to_entries(report: &ReproReport, anchor: &str) -> Vec<ResultEntry> {
    report
        .checks
        .iter()
        .map(|c| ResultEntry {
            label: format!("{}/{}", report.name, c.label),
            value: c.computed,
            threshold: Some(c.expected),
            tolerance: c.tolerance,
            pass: c.pass,
            paper_anchor: anchor.into(),
        })
        .collect()
}
