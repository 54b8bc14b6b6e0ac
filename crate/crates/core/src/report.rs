//! Validation reports shared by every checker in the crate.

use serde::Serialize;
use std::fmt;

/// One violated identity, labelled by the family it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.check, self.detail)
    }
}

/// Outcome of an exhaustive check. `valid` is true iff no witness was recorded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub valid: bool,
    pub witnesses: Vec<Witness>,
    /// Number of violations found, which may exceed `witnesses.len()` when a limit is set.
    pub violations: usize,
    #[serde(skip)]
    limit: Option<usize>,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report { valid: true, witnesses: Vec::new(), violations: 0, limit: None }
    }

    /// A report that stops recording after `limit` witnesses. Checkers poll
    /// [`Report::saturated`] to abandon work early.
    pub fn with_limit(limit: usize) -> Self {
        Report { limit: Some(limit), ..Report::new() }
    }

    pub fn fail(&mut self, check: &str, detail: impl Into<String>) {
        self.valid = false;
        self.violations += 1;
        if self.limit.is_none_or(|l| self.witnesses.len() < l) {
            self.witnesses.push(Witness { check: check.to_string(), detail: detail.into() });
        }
    }

    /// Like [`Report::fail`] but only formats the detail when it will be kept.
    pub fn fail_with(&mut self, check: &str, detail: impl FnOnce() -> String) {
        self.valid = false;
        self.violations += 1;
        if self.limit.is_none_or(|l| self.witnesses.len() < l) {
            self.witnesses.push(Witness { check: check.to_string(), detail: detail() });
        }
    }

    pub fn saturated(&self) -> bool {
        self.limit.is_some_and(|l| self.violations >= l)
    }

    pub fn merge(&mut self, other: Report) {
        if !other.valid {
            self.valid = false;
        }
        self.violations += other.violations;
        for w in other.witnesses {
            if self.limit.is_none_or(|l| self.witnesses.len() < l) {
                self.witnesses.push(w);
            }
        }
    }

    pub fn has_check(&self, check: &str) -> bool {
        self.witnesses.iter().any(|w| w.check == check)
    }
}
