//! Structured outcome of an identity sweep.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where an identity first failed, with both sides in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

/// Result of checking one identity over an index range.
///
/// `status` is `Fail` exactly when `counterexample` is present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub range: String,
    pub status: Status,
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{verdict} {} [{}] ({} checks)", self.id, self.range, self.checked)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "\n  at {}: lhs = {} ; rhs = {}", cx.at, cx.lhs, cx.rhs)?;
        }
        Ok(())
    }
}

/// Accumulates checks; keeps only the first counterexample.
#[derive(Debug)]
pub struct Checker {
    id: String,
    range: String,
    checked: usize,
    counterexample: Option<Counterexample>,
}

impl Checker {
    pub fn new(id: impl Into<String>, range: impl Into<String>) -> Self {
        Checker {
            id: id.into(),
            range: range.into(),
            checked: 0,
            counterexample: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Compares `lhs` and `rhs`; `at` is only rendered on mismatch.
    pub fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        at: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.checked += 1;
        if lhs == rhs {
            return true;
        }
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                at: at(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        false
    }

    /// Records a boolean property; `detail` describes a failure.
    pub fn holds(&mut self, at: impl FnOnce() -> String, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                at: at(),
                lhs: detail(),
                rhs: "true".into(),
            });
        }
        ok
    }

    pub fn finish(self) -> IdentityReport {
        IdentityReport {
            id: self.id,
            range: self.range,
            status: if self.counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}
