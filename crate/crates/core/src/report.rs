//! Structured pass/fail records for every verified claim.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::semigroup::CurveParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsSummary {
    pub m0: u64,
    pub d: u64,
    pub p: usize,
    pub a: u64,
    pub b: usize,
}

impl From<&CurveParams> for ParamsSummary {
    fn from(c: &CurveParams) -> Self {
        ParamsSummary {
            m0: c.m0,
            d: c.d,
            p: c.p,
            a: c.a,
            b: c.b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub params: ParamsSummary,
    pub status: Status,
    /// Short human-readable summary (counts, or what went wrong).
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Value>>,
}

impl CheckResult {
    pub fn pass(check: &str, params: &CurveParams, detail: impl Into<String>) -> Self {
        CheckResult {
            check: check.to_string(),
            params: params.into(),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(
        check: &str,
        params: &CurveParams,
        detail: impl Into<String>,
        witness: Vec<Value>,
    ) -> Self {
        CheckResult {
            check: check.to_string(),
            params: params.into(),
            status: Status::Fail,
            detail: detail.into(),
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, check: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }

    /// `Err(Error::Verification)` naming the first failed check, if any.
    pub fn into_result(self) -> Result<VerificationReport> {
        if let Some(f) = self.failures().next() {
            return Err(Error::Verification(format!("{}: {}", f.check, f.detail)));
        }
        Ok(self)
    }
}
