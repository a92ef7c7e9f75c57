//! Structured and text reports, and the exit-code policy.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cremona_core::multiplicity::fano_thresholds;
use cremona_core::{CheckResult, CheckStatus};
use serde_json::{json, Value};

use crate::config::{rational_string, OutputFormat, RunConfig};

pub const REPORT_VERSION: u32 = 1;

/// Exit 1 on any failure, or on any discrepancy in strict mode.
pub fn exit_code(results: &[CheckResult], strict_paper: bool) -> i32 {
    let bad = |r: &CheckResult| {
        r.status == CheckStatus::Fail || (strict_paper && r.status == CheckStatus::PaperDiscrepancy)
    };
    if results.iter().any(bad) {
        1
    } else {
        0
    }
}

/// Digests in place of full text unless requested; timings zeroed on request.
fn presented(results: &[CheckResult], config: &RunConfig) -> Vec<CheckResult> {
    results
        .iter()
        .map(|r| {
            let mut r = r.clone();
            if !config.full_polys {
                for rec in r.polynomials.values_mut() {
                    *rec = rec.digest_only();
                }
            }
            if config.no_timing {
                r.elapsed_ms = 0;
            }
            r
        })
        .collect()
}

fn find<'a>(results: &'a [CheckResult], id: &str) -> Option<&'a CheckResult> {
    results.iter().find(|r| r.check_id == id)
}

/// Locus name to the four form multiplicities and that of `D`.
pub fn multiplicity_summary(results: &[CheckResult]) -> Option<BTreeMap<String, Value>> {
    let rows = find(results, "mult.table")?.computed.get("table")?.get("rows")?.as_array()?;
    let mut out = BTreeMap::new();
    for row in rows {
        let locus = row.get("locus")?.as_str()?.to_string();
        let forms: Vec<Value> = row
            .get("forms")?
            .as_array()?
            .iter()
            .map(|c| c.get("value").cloned())
            .collect::<Option<_>>()?;
        let d = row.get("discriminant")?.get("value")?.clone();
        out.insert(locus, json!({ "forms": forms, "D": d }));
    }
    Some(out)
}

fn verdicts(results: &[CheckResult]) -> Value {
    let (half, quarter) = fano_thresholds(cremona_core::cremona::FAMILY_DEGREE);
    let verdict = find(results, "fano.verdict").and_then(|r| r.computed.get("verdict"));
    let get = |k: &str| verdict.and_then(|v| v.get(k)).cloned().unwrap_or(Value::Null);
    json!({
        "point_threshold": rational_string(&half),
        "curve_threshold": rational_string(&quarter),
        "point_min": get("point_min"),
        "curve_min": get("curve_min"),
    })
}

fn counts(results: &[CheckResult]) -> BTreeMap<&'static str, usize> {
    let mut c = BTreeMap::new();
    for s in [CheckStatus::Pass, CheckStatus::Fail, CheckStatus::PaperDiscrepancy, CheckStatus::Skipped] {
        c.insert(s.as_str(), results.iter().filter(|r| r.status == s).count());
    }
    c
}

pub fn render_json(results: &[CheckResult], config: &RunConfig) -> String {
    let shown = presented(results, config);
    let report = json!({
        "version": REPORT_VERSION,
        "config": config.to_json(),
        "checks": shown,
        "multiplicity_table": multiplicity_summary(results),
        "verdicts": verdicts(results),
        "summary": counts(results),
    });
    let mut s = serde_json::to_string_pretty(&report).expect("serializable");
    s.push('\n');
    s
}

pub fn render_text(results: &[CheckResult], config: &RunConfig) -> String {
    let shown = presented(results, config);
    let id_w = shown.iter().map(|r| r.check_id.len()).max().unwrap_or(0).max(5);
    let status_w = "paper_discrepancy".len();
    let ms_w = shown.iter().map(|r| r.elapsed_ms.to_string().len()).max().unwrap_or(0).max(2);
    let mut out = String::new();
    writeln!(out, "{:<id_w$}  {:<status_w$}  {:>ms_w$}  detail", "check", "status", "ms").unwrap();
    for r in &shown {
        let stated = r.paper_value.as_ref().map(|v| format!(" [stated: {v}]")).unwrap_or_default();
        writeln!(
            out,
            "{:<id_w$}  {:<status_w$}  {:>ms_w$}  {}{stated}",
            r.check_id,
            r.status.as_str(),
            r.elapsed_ms,
            r.detail
        )
        .unwrap();
    }
    if let Some(table) = multiplicity_summary(results) {
        writeln!(out, "\nmultiplicities at t = 1\nlocus  f0  f1  f2  f3   D").unwrap();
        for (locus, row) in &table {
            let forms: Vec<String> = row["forms"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|v| format!("{:>3}", v.as_u64().unwrap_or(0)))
                .collect();
            let d = row["D"].as_u64().unwrap_or(0);
            writeln!(out, "{locus:<5} {} {d:>3}", forms.join(" ")).unwrap();
        }
    }
    let v = verdicts(results);
    if !v["point_min"].is_null() {
        writeln!(
            out,
            "\nthresholds: point {} (min {}), curve {} (min {})",
            v["point_threshold"].as_str().unwrap_or(""),
            v["point_min"],
            v["curve_threshold"].as_str().unwrap_or(""),
            v["curve_min"]
        )
        .unwrap();
    }
    if config.full_polys {
        writeln!(out, "\npolynomials").unwrap();
        for r in &shown {
            for (key, rec) in &r.polynomials {
                writeln!(out, "{}.{key} = {}", r.check_id, rec.text.as_deref().unwrap_or("")).unwrap();
            }
        }
    }
    let c = counts(results);
    writeln!(
        out,
        "\nsummary: {} pass, {} fail, {} paper_discrepancy, {} skipped",
        c["pass"], c["fail"], c["paper_discrepancy"], c["skipped"]
    )
    .unwrap();
    out
}

pub fn render(results: &[CheckResult], config: &RunConfig) -> String {
    match config.output_format {
        OutputFormat::Text => render_text(results, config),
        OutputFormat::Json => render_json(results, config),
    }
}

/// Writes the report to the configured path or stdout and returns the exit
/// code; an unwritable path yields 2.
pub fn emit_report(results: &[CheckResult], config: &RunConfig) -> i32 {
    let text = render(results, config);
    match &config.output_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    exit_code(results, config.strict_paper)
}
