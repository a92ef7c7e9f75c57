//! Driver for the certificate suite: configuration, randomized pre-checks,
//! orchestration and reporting.

pub mod config;
pub mod precheck;
pub mod report;
pub mod runner;

pub use config::{ConfigError, OutputFormat, ParameterValue, RunConfig, CHECK_IDS};
pub use precheck::probabilistic_identity_check;
pub use report::{emit_report, exit_code, render};
pub use runner::run_checks;
