//! Outcome records for verification checks.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    /// A mathematical assertion is violated.
    Fail,
    /// The computation succeeded but contradicts a stated reference value.
    PaperDiscrepancy,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::PaperDiscrepancy => "paper_discrepancy",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// Term count, degree and SHA-256 of the canonical text of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub terms: usize,
    pub degree: u32,
    pub hash: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl PolyRecord {
    pub fn of<C: Scalar>(p: &Poly<C>) -> Self {
        let text = p.to_string();
        let hash = Sha256::digest(text.as_bytes());
        PolyRecord {
            terms: p.len(),
            degree: p.total_degree(),
            hash: hash.iter().map(|b| format!("{b:02x}")).collect(),
            text: Some(text),
        }
    }

    pub fn digest_only(&self) -> Self {
        PolyRecord {
            text: None,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: CheckStatus,
    pub computed: BTreeMap<String, Value>,
    pub polynomials: BTreeMap<String, PolyRecord>,
    pub paper_value: Option<String>,
    pub elapsed_ms: u64,
    pub detail: String,
}

impl CheckResult {
    pub fn new(check_id: impl Into<String>, status: CheckStatus, detail: impl Into<String>) -> Self {
        CheckResult {
            check_id: check_id.into(),
            status,
            computed: BTreeMap::new(),
            polynomials: BTreeMap::new(),
            paper_value: None,
            elapsed_ms: 0,
            detail: detail.into(),
        }
    }

    pub fn pass(check_id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(check_id, CheckStatus::Pass, detail)
    }

    pub fn fail(check_id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(check_id, CheckStatus::Fail, detail)
    }

    pub fn skipped(check_id: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(check_id, CheckStatus::Skipped, detail)
    }

    pub fn with_value(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.computed.insert(key.to_string(), value.into());
        self
    }

    pub fn with_poly<C: Scalar>(mut self, key: &str, p: &Poly<C>) -> Self {
        self.polynomials.insert(key.to_string(), PolyRecord::of(p));
        self
    }

    pub fn with_paper_value(mut self, value: impl Into<String>) -> Self {
        self.paper_value = Some(value.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Runs `f` and stamps the wall-clock time onto its result.
    pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
        let start = Instant::now();
        let mut r = f();
        r.elapsed_ms = start.elapsed().as_millis() as u64;
        r
    }
}
