//! Run configuration and the fixed catalogue of check ids.

use std::path::PathBuf;
use std::str::FromStr;

use cremona_core::Rational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

/// Every check id in report order.
pub const CHECK_IDS: &[&str] = &[
    "cremona.base_locus",
    "cremona.construction",
    "cremona.coprimality",
    "cremona.covariance",
    "cremona.covariance.precheck",
    "cremona.degeneration",
    "cremona.group_law",
    "cremona.group_law.precheck",
    "cremona.inverse",
    "cremona.inverse.precheck",
    "discriminant.build",
    "discriminant.restriction",
    "discriminant.resultant",
    "discriminant.singular_locus",
    "fano.verdict",
    "mult.stated.C_f1",
    "mult.stated.L_f1",
    "mult.stated.Q_f3",
    "mult.stated.T_D",
    "mult.table",
];

/// Ids of the randomized pre-checks, the only checks run in fast mode.
pub const PRECHECK_IDS: &[&str] = &[
    "cremona.covariance.precheck",
    "cremona.group_law.precheck",
    "cremona.inverse.precheck",
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("invalid parameter value `{0}`: expected `symbolic` or a rational p/q")]
    BadParameter(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParameterValue {
    Symbolic,
    Value(Rational),
}

impl FromStr for ParameterValue {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "symbolic" {
            return Ok(ParameterValue::Symbolic);
        }
        s.parse::<Rational>()
            .map(ParameterValue::Value)
            .map_err(|_| ConfigError::BadParameter(s.to_string()))
    }
}

impl ParameterValue {
    pub fn to_json(&self) -> Value {
        match self {
            ParameterValue::Symbolic => json!("symbolic"),
            ParameterValue::Value(r) => json!(rational_string(r)),
        }
    }
}

/// `p/q` with the denominator always written out.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// `None` selects every check.
    pub selected_checks: Option<Vec<String>>,
    pub t_value: ParameterValue,
    pub seed: u64,
    pub fast_only: bool,
    pub strict_paper: bool,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub full_polys: bool,
    pub no_timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            selected_checks: None,
            t_value: ParameterValue::Symbolic,
            seed: 0,
            fast_only: false,
            strict_paper: false,
            output_path: None,
            output_format: OutputFormat::Text,
            full_polys: false,
            no_timing: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for id in self.selected_checks.iter().flatten() {
            if !CHECK_IDS.contains(&id.as_str()) {
                return Err(ConfigError::UnknownCheck(id.clone()));
            }
        }
        Ok(())
    }

    /// Ids that will appear in the report. A heavy check pulls in its
    /// pre-check; fast mode keeps only pre-checks.
    pub fn effective_checks(&self) -> Vec<&'static str> {
        let wanted = |id: &str| match &self.selected_checks {
            None => true,
            Some(sel) => sel.iter().any(|s| s == id || format!("{s}.precheck") == id),
        };
        CHECK_IDS
            .iter()
            .copied()
            .filter(|id| wanted(id))
            .filter(|id| !self.fast_only || PRECHECK_IDS.contains(id))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "selected_checks": match &self.selected_checks {
                None => json!("all"),
                Some(sel) => json!(sel),
            },
            "t_value": self.t_value.to_json(),
            "seed": self.seed,
            "fast_only": self.fast_only,
            "strict_paper": self.strict_paper,
            "output_path": self.output_path.as_ref().map(|p| p.display().to_string()),
            "output_format": self.output_format,
            "full_polys": self.full_polys,
            "no_timing": self.no_timing,
        })
    }
}
