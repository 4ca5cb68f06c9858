//! Suite reports in text and structured (JSON) form.

use std::fmt::Write as _;

use hopfkit_core::{Report, Status};
use serde::Serialize;

/// Several subject reports under one suite name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub reports: Vec<Report>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        SuiteReport { suite: suite.into(), reports: Vec::new() }
    }

    pub fn push(&mut self, r: Report) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.reports.extend(other.reports);
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    fn counts(&self) -> (usize, usize, usize) {
        let checks = self.reports.iter().flat_map(|r| &r.checks);
        checks.fold((0, 0, 0), |(p, f, s), c| match c.status {
            Status::Pass => (p + 1, f, s),
            Status::Fail => (p, f + 1, s),
            Status::Skipped(_) => (p, f, s + 1),
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Structured => self.structured(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {}", self.suite);
        for r in &self.reports {
            let _ = writeln!(out, "== {}", r.subject);
            for c in &r.checks {
                let tag = match &c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped(_) => "skip",
                };
                let _ = write!(out, "  {tag}  {}", c.id);
                if let Status::Skipped(reason) = &c.status {
                    let _ = write!(out, " ({reason})");
                } else if !c.detail.is_empty() {
                    let _ = write!(out, "  {}", c.detail);
                }
                if let Some(w) = &c.witness {
                    let _ = write!(out, "  witness {:?}", w.indices);
                    if !w.values.is_empty() {
                        let _ = write!(out, " values [{}]", w.values.join(", "));
                    }
                }
                out.push('\n');
            }
            for f in &r.findings {
                let _ = writeln!(out, "  note  {f}");
            }
        }
        let (p, f, s) = self.counts();
        let verdict = if self.passed() { "pass" } else { "fail" };
        let _ = writeln!(out, "result {verdict}: {p} passed, {f} failed, {s} skipped");
        out
    }

    pub fn structured(&self) -> String {
        let doc = Doc {
            suite: &self.suite,
            passed: self.passed(),
            exit_code: self.exit_code(),
            reports: self
                .reports
                .iter()
                .map(|r| SubjectDoc {
                    subject: &r.subject,
                    checks: r
                        .checks
                        .iter()
                        .map(|c| CheckDoc {
                            id: &c.id,
                            status: match c.status {
                                Status::Pass => "pass",
                                Status::Fail => "fail",
                                Status::Skipped(_) => "skipped",
                            },
                            reason: match &c.status {
                                Status::Skipped(r) => Some(r),
                                _ => None,
                            },
                            detail: &c.detail,
                            witness: c.witness.as_ref().map(|w| WitnessDoc { indices: &w.indices, values: &w.values }),
                        })
                        .collect(),
                    findings: &r.findings,
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize)]
struct Doc<'a> {
    suite: &'a str,
    passed: bool,
    exit_code: i32,
    reports: Vec<SubjectDoc<'a>>,
}

#[derive(Serialize)]
struct SubjectDoc<'a> {
    subject: &'a str,
    checks: Vec<CheckDoc<'a>>,
    findings: &'a [String],
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    id: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a String>,
    detail: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessDoc<'a>>,
}

#[derive(Serialize)]
struct WitnessDoc<'a> {
    indices: &'a [usize],
    values: &'a [String],
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfkit_core::Witness;

    #[test]
    fn empty_suite_is_header_only() {
        let s = SuiteReport::new("nothing");
        assert_eq!(s.exit_code(), 0);
        assert_eq!(s.text(), "suite nothing\nresult pass: 0 passed, 0 failed, 0 skipped\n");
        let v: serde_json::Value = serde_json::from_str(&s.structured()).unwrap();
        assert_eq!(v["reports"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn failure_carries_witness() {
        let mut r = Report::new("broken");
        r.fail("associativity", "", Some(Witness::at(&[1, 0, 1])));
        r.skip("brute-force", "over the rationals");
        let mut s = SuiteReport::new("demo");
        s.push(r);
        assert_eq!(s.exit_code(), 1);
        let v: serde_json::Value = serde_json::from_str(&s.structured()).unwrap();
        assert_eq!(v["reports"][0]["checks"][0]["witness"]["indices"], serde_json::json!([1, 0, 1]));
        assert_eq!(v["reports"][0]["checks"][1]["status"], "skipped");
        assert!(s.text().contains("witness [1, 0, 1]"));
    }
}
