//! Verification reports shared by every checking routine.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::qseries::{Comparison, Mismatch};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Mismatch,
    Error,
}

/// Outcome of one check: either every coefficient below `order` agreed, or
/// the first disagreeing power is recorded.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    /// Wall time in milliseconds; absent when timing is suppressed.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
    /// Error text for checks that could not be evaluated.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn verified(id: impl Into<String>, order: usize) -> Self {
        VerificationReport { id: id.into(), order, status: Status::Verified, first_mismatch: None, millis: None, error: None }
    }

    pub fn mismatch(id: impl Into<String>, order: usize, m: Mismatch) -> Self {
        VerificationReport {
            id: id.into(),
            order,
            status: Status::Mismatch,
            first_mismatch: Some(m),
            millis: None,
            error: None,
        }
    }

    pub fn from_comparison(id: impl Into<String>, order: usize, c: Comparison) -> Self {
        match c.mismatch {
            None => Self::verified(id, order),
            Some(m) => Self::mismatch(id, order, m),
        }
    }

    pub fn from_error(id: impl Into<String>, order: usize, e: &crate::Error) -> Self {
        VerificationReport {
            id: id.into(),
            order,
            status: Status::Error,
            first_mismatch: None,
            millis: None,
            error: Some(e.to_string()),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Runs `f`, records its wall time and converts errors into reports.
    pub fn timed(id: &str, order: usize, f: impl FnOnce() -> crate::Result<VerificationReport>) -> Self {
        let start = Instant::now();
        let mut r = f().unwrap_or_else(|e| Self::from_error(id, order, &e));
        r.millis = Some(start.elapsed().as_millis() as u64);
        r
    }

    pub fn without_timing(mut self) -> Self {
        self.millis = None;
        self
    }
}

/// Folds several sub-reports into one; the first failure wins.
pub fn combine(id: impl Into<String>, order: usize, parts: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
    let id = id.into();
    for p in parts {
        if !p.is_verified() {
            return VerificationReport { id, order, millis: None, ..p };
        }
    }
    VerificationReport::verified(id, order)
}
