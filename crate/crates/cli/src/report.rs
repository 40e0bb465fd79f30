use std::collections::BTreeMap;
use std::fmt::Write as _;

use abel_core::ratpoly::{to_decimal, to_fraction_string};
use abel_core::{Poly, Rational};
use serde::Serialize;

/// Digits after the point in `approx` renderings.
pub const APPROX_DIGITS: usize = 12;

/// One line of a report. Unused fields are omitted from JSON.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Entry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Entry {
    pub fn rational(name: impl Into<String>, r: &Rational) -> Self {
        Entry {
            name: name.into(),
            value: Some(to_fraction_string(r)),
            approx: Some(to_decimal(r, APPROX_DIGITS)),
            ..Default::default()
        }
    }

    pub fn poly(name: impl Into<String>, p: &Poly) -> Self {
        Entry {
            name: name.into(),
            polynomial: Some(p.to_string()),
            ..Default::default()
        }
    }

    pub fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Entry {
            name: name.into(),
            passed: Some(passed),
            detail: Some(detail.into()),
            ..Default::default()
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    fn text_line(&self) -> String {
        let mut line = String::new();
        if let Some(passed) = self.passed {
            let _ = write!(line, "[{}] ", if passed { "PASS" } else { "FAIL" });
        }
        line.push_str(&self.name);
        if let Some(v) = &self.value {
            let _ = write!(line, " = {v}");
        }
        if let Some(p) = &self.polynomial {
            let _ = write!(line, " = {p}");
        }
        if let Some(a) = &self.approx {
            let _ = write!(line, "  (approx {a})");
        }
        if let Some(d) = &self.detail {
            let _ = write!(line, "  {d}");
        }
        line
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<Entry>,
    pub verdict: String,
    /// Whether the verdict is negative (exit status 1).
    #[serde(skip)]
    pub negative: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            verdict: String::new(),
            negative: false,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.into(), value.to_string());
    }

    pub fn push(&mut self, entry: Entry) {
        self.results.push(entry);
    }

    pub fn finish(mut self, verdict: impl Into<String>, negative: bool) -> Self {
        self.verdict = verdict.into();
        self.negative = negative;
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for e in &self.results {
            let _ = writeln!(out, "{}", e.text_line());
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
