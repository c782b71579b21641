//! Structured pass/fail records with exact residual payloads.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::field::ExpField;
use crate::serial::field_to_json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub label: String,
    pub value: Value,
}

/// `status == Pass` exactly when `residuals` is empty. Errors are recorded
/// as a residual labelled `error`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub cases: usize,
    pub residuals: Vec<Residual>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Merges `other` into `self`, prefixing its residual labels.
    pub fn absorb(&mut self, other: VerificationReport) {
        for r in other.residuals {
            self.residuals.push(Residual { label: format!("{}/{}", other.check, r.label), value: r.value });
        }
        self.notes.extend(other.notes);
        self.cases += other.cases;
        self.status = status_of(&self.residuals, self.status == Status::Error || other.status == Status::Error);
    }
}

fn status_of(residuals: &[Residual], errored: bool) -> Status {
    if errored {
        Status::Error
    } else if residuals.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Accumulates expectations for one check. Residuals are kept only for
/// failed expectations.
#[derive(Debug)]
pub struct ReportBuilder {
    check: String,
    anchor: String,
    seed: Option<u64>,
    cases: usize,
    residuals: Vec<Residual>,
    notes: Vec<String>,
    errored: bool,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(check: impl Into<String>, anchor: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            anchor: anchor.into(),
            seed: None,
            cases: 0,
            residuals: Vec::new(),
            notes: Vec::new(),
            errored: false,
            started: Instant::now(),
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn residual(&mut self, label: impl Into<String>, value: Value) {
        self.residuals.push(Residual { label: label.into(), value });
    }

    /// Records `field` if it is not identically zero.
    pub fn expect_zero(&mut self, label: impl Into<String>, field: &ExpField) -> bool {
        if field.is_zero() {
            return true;
        }
        self.residual(label, field_to_json(field));
        false
    }

    /// Records `lhs - rhs` if the fields differ.
    pub fn expect_equal(&mut self, label: impl Into<String>, lhs: &ExpField, rhs: &ExpField) -> bool {
        match lhs.sub(rhs) {
            Ok(diff) => self.expect_zero(label, &diff),
            Err(e) => {
                self.error(label, &e);
                false
            }
        }
    }

    pub fn expect(&mut self, label: impl Into<String>, ok: bool, detail: impl FnOnce() -> Value) -> bool {
        if !ok {
            self.residual(label, detail());
        }
        ok
    }

    pub fn error(&mut self, label: impl Into<String>, err: &Error) {
        self.errored = true;
        self.residual(format!("error: {}", label.into()), Value::String(err.to_string()));
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            status: status_of(&self.residuals, self.errored),
            check: self.check,
            anchor: self.anchor,
            seed: self.seed,
            cases: self.cases,
            residuals: self.residuals,
            notes: self.notes,
            wall_time_ms: self.started.elapsed().as_secs_f64() * 1e3,
        }
    }
}
