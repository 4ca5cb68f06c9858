//! Pass/fail records with counterexample payloads.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::field::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

/// Basis indices (and optionally scalar values) locating a violation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub values: Vec<String>,
}

impl Witness {
    pub fn at(indices: &[usize]) -> Self {
        Witness { indices: indices.to_vec(), values: Vec::new() }
    }

    pub fn with_values(indices: &[usize], values: &[Scalar]) -> Self {
        Witness { indices: indices.to_vec(), values: values.iter().map(|v| v.to_string()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
    /// Negative mathematical facts (e.g. "no antipode"); never failures.
    pub findings: Vec<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new(), findings: Vec::new() }
    }

    pub fn pass(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { id: id.into(), status: Status::Pass, detail: detail.into(), witness: None });
    }

    pub fn fail(&mut self, id: impl Into<String>, detail: impl Into<String>, witness: Option<Witness>) {
        self.checks.push(Check { id: id.into(), status: Status::Fail, detail: detail.into(), witness });
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            status: Status::Skipped(reason.into()),
            detail: String::new(),
            witness: None,
        });
    }

    /// Records `Ok` as a pass and `Err(witness)` as a failure.
    pub fn record(&mut self, id: impl Into<String>, outcome: Result<(), Witness>) {
        match outcome {
            Ok(()) => self.pass(id, ""),
            Err(w) => self.fail(id, "", Some(w)),
        }
    }

    pub fn expect(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        if ok {
            self.pass(id, detail)
        } else {
            self.fail(id, detail, None)
        }
    }

    pub fn finding(&mut self, text: impl Into<String>) {
        self.findings.push(text.into());
    }

    /// Appends another report's checks with `prefix/` prepended to their ids.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = alloc::format!("{prefix}/{}", c.id);
            self.checks.push(c);
        }
        self.findings.extend(other.findings);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status_of(&self, id: &str) -> Option<&Status> {
        self.checks.iter().find(|c| c.id == id).map(|c| &c.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
