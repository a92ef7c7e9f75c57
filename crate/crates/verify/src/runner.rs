//! Executes the selected checks and collects their results in id order.

use cremona_core::binary_cubic::{
    build_discriminant, discriminant_resultant_oracle, restriction_factorization_check,
    singular_locus_check,
};
use cremona_core::cremona::{
    base_locus_certificate, build_family, coprimality_certificate, standard_ring,
    verify_covariance, verify_degeneration, verify_group_law_members, verify_inverse_pair,
    FamilyParameter, FAMILY_DEGREE,
};
use cremona_core::multiplicity::{fano_verdict_from_table, multiplicity_table, TableLocus};
use cremona_core::{rat, CheckResult, CheckStatus, QFamilyMember, QPoly, Rational, RingRef};
use rayon::prelude::*;
use serde_json::json;

use crate::config::{ConfigError, ParameterValue, RunConfig};
use crate::precheck::{covariance_precheck, group_law_precheck, inverse_precheck, DEFAULT_TRIALS};

const DISCRIMINANT_TEXT: &str = "x0^2*x3^2 - 6*x0*x1*x2*x3 + 4*x0*x2^3 + 4*x1^3*x3 - 3*x1^2*x2^2";

/// Stated multiplicities compared against the table: id, locus, form index
/// (`None` for `D`), stated value.
const STATED: &[(&str, TableLocus, Option<usize>, u32)] = &[
    ("mult.stated.C_f1", TableLocus::C, Some(1), 3),
    ("mult.stated.L_f1", TableLocus::L, Some(1), 3),
    ("mult.stated.Q_f3", TableLocus::Q, Some(3), 6),
    ("mult.stated.T_D", TableLocus::T, None, 2),
];

fn parameter(value: &ParameterValue) -> FamilyParameter<Rational> {
    match value {
        ParameterValue::Symbolic => FamilyParameter::Symbolic("t".into()),
        ParameterValue::Value(r) => FamilyParameter::Value(r.clone()),
    }
}

fn member(id: &str, ring: &RingRef, p: FamilyParameter<Rational>) -> Result<QFamilyMember, Box<CheckResult>> {
    build_family(ring, p).map_err(|e| Box::new(CheckResult::fail(id, e.to_string())))
}

fn discriminant_build(ring: &RingRef) -> CheckResult {
    const ID: &str = "discriminant.build";
    let d: QPoly = build_discriminant(ring);
    let expected = QPoly::parse(DISCRIMINANT_TEXT, ring).expect("valid literal");
    let ok = d == expected && d.is_homogeneous() && d.geometric_degree() == 4;
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    CheckResult::new(ID, status, format!("D = {d}"))
        .with_poly("D", &d)
        .with_value("homogeneous", d.is_homogeneous())
}

fn discriminant_resultant(ring: &RingRef) -> CheckResult {
    const ID: &str = "discriminant.resultant";
    let d: QPoly = build_discriminant(ring);
    let oracle: QPoly = discriminant_resultant_oracle(ring);
    let expected = (&QPoly::var_at(ring, 0) * &d).scale(&rat(27));
    let status = if oracle == expected { CheckStatus::Pass } else { CheckStatus::Fail };
    CheckResult::new(ID, status, "Res(f, f') of the dehomogenized cubic = 27 x0 D")
        .with_poly("resultant", &oracle)
}

fn construction(ring: &RingRef, t: &ParameterValue) -> CheckResult {
    const ID: &str = "cremona.construction";
    let m = match member(ID, ring, parameter(t)) {
        Ok(m) => m,
        Err(r) => return *r,
    };
    let homogeneous: Vec<bool> = m.forms().iter().map(QPoly::is_homogeneous).collect();
    let degrees: Vec<u32> = m.forms().iter().map(QPoly::geometric_degree).collect();
    let ok = homogeneous.iter().all(|&h| h) && degrees.iter().all(|&d| d == FAMILY_DEGREE);
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    let mut r = CheckResult::new(ID, status, format!("f_({}) has four forms of degree {:?}", m.label(), degrees))
        .with_value("degrees", degrees)
        .with_value("homogeneous", homogeneous);
    for (i, f) in m.forms().iter().enumerate() {
        r = r.with_poly(&format!("f{i}"), f);
    }
    r
}

fn abort(id: &str, precheck: &CheckResult) -> CheckResult {
    CheckResult::fail(id, format!("aborted: pre-check failed ({})", precheck.detail))
}

fn covariance_group(ring: &RingRef, config: &RunConfig, heavy: bool) -> Vec<CheckResult> {
    let m = match member("cremona.covariance.precheck", ring, parameter(&config.t_value)) {
        Ok(m) => m,
        Err(r) => return vec![*r],
    };
    let pre = CheckResult::timed(|| covariance_precheck(m.map(), DEFAULT_TRIALS, config.seed));
    let mut out = vec![pre.clone()];
    if heavy {
        out.push(if pre.is_pass() {
            CheckResult::timed(|| verify_covariance(&m))
        } else {
            abort("cremona.covariance", &pre)
        });
    }
    out
}

fn inverse_group(ring: &RingRef, config: &RunConfig, heavy: bool) -> Vec<CheckResult> {
    const ID: &str = "cremona.inverse.precheck";
    let inner = match member(ID, ring, parameter(&config.t_value)) {
        Ok(m) => m,
        Err(r) => return vec![*r],
    };
    let outer = match member(ID, ring, FamilyParameter::Expr(-inner.parameter())) {
        Ok(m) => m,
        Err(r) => return vec![*r],
    };
    let pre = CheckResult::timed(|| inverse_precheck(outer.map(), inner.map(), DEFAULT_TRIALS, config.seed));
    let mut out = vec![pre.clone()];
    if heavy {
        out.push(if pre.is_pass() {
            CheckResult::timed(|| verify_inverse_pair(&outer, &inner))
        } else {
            abort("cremona.inverse", &pre)
        });
    }
    out
}

/// Both parameters stay symbolic regardless of the configured value.
fn group_law_group(ring: &RingRef, config: &RunConfig, heavy: bool) -> Vec<CheckResult> {
    let build = || -> Result<[QFamilyMember; 3], Box<CheckResult>> {
        const ID: &str = "cremona.group_law.precheck";
        let s = member(ID, ring, FamilyParameter::Symbolic("s".into()))?;
        let t = member(ID, ring, FamilyParameter::Symbolic("t".into()))?;
        let sum = member(ID, ring, FamilyParameter::Expr(s.parameter() + t.parameter()))?;
        Ok([s, t, sum])
    };
    let [s, t, sum] = match build() {
        Ok(m) => m,
        Err(r) => return vec![*r],
    };
    let pre = CheckResult::timed(|| {
        group_law_precheck(s.map(), t.map(), sum.map(), DEFAULT_TRIALS, config.seed)
    });
    let mut out = vec![pre.clone()];
    if heavy {
        out.push(if pre.is_pass() {
            CheckResult::timed(|| verify_group_law_members(&s, &t, sum.map()))
        } else {
            abort("cremona.group_law", &pre)
        });
    }
    out
}

fn certificate(
    id: &str,
    ring: &RingRef,
    t: &ParameterValue,
    f: fn(&QFamilyMember) -> CheckResult,
) -> CheckResult {
    match member(id, ring, parameter(t)) {
        Ok(m) => f(&m),
        Err(r) => *r,
    }
}

/// Table at `t = 1` and every check derived from it.
fn multiplicity_group(ring: &RingRef, seed: u64) -> Vec<CheckResult> {
    let start = std::time::Instant::now();
    let m = match member("mult.table", ring, FamilyParameter::Value(rat(1))) {
        Ok(m) => m,
        Err(r) => return vec![*r],
    };
    let d: QPoly = build_discriminant(ring);
    let table = match multiplicity_table(m.map(), &d, seed) {
        Ok(t) => t,
        Err(e) => return vec![CheckResult::fail("mult.table", e.to_string())],
    };
    let table_ms = start.elapsed().as_millis() as u64;
    let ok = table.all_agree();
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    let mut table_result = CheckResult::new(
        "mult.table",
        status,
        if ok {
            "every entry confirmed by two independent methods at t = 1"
        } else {
            "methods disagree on at least one entry"
        },
    )
    .with_value("table", serde_json::to_value(&table).expect("serializable"));
    table_result.elapsed_ms = table_ms;

    let mut out = vec![table_result];
    for &(id, locus, form, stated) in STATED {
        let row = table.row(locus);
        let entry = match form {
            Some(i) => &row.forms[i],
            None => &row.discriminant,
        };
        let status = if !entry.agrees() {
            CheckStatus::Fail
        } else if entry.value == stated {
            CheckStatus::Pass
        } else {
            CheckStatus::PaperDiscrepancy
        };
        let what = form.map_or("D".to_string(), |i| format!("f{i}"));
        out.push(
            CheckResult::new(
                id,
                status,
                format!(
                    "mult_{}({what}) computed {} ({:?}) and {} ({:?})",
                    locus.name(),
                    entry.value,
                    entry.primary,
                    entry.oracle_value,
                    entry.oracle
                ),
            )
            .with_value("computed", entry.value)
            .with_value(
                "methods",
                json!({
                    format!("{:?}", entry.primary): entry.value,
                    format!("{:?}", entry.oracle): entry.oracle_value,
                }),
            )
            .with_paper_value(stated.to_string()),
        );
    }
    out.push(CheckResult::timed(|| fano_verdict_from_table(m.map().degree(), &table)));
    out
}

/// Runs the configured checks. Independent groups run concurrently; the
/// results are ordered by check id.
pub fn run_checks(config: &RunConfig) -> Result<Vec<CheckResult>, ConfigError> {
    config.validate()?;
    let wanted = config.effective_checks();
    let has = |id: &str| wanted.contains(&id);
    let has_prefix = |p: &str| wanted.iter().any(|id| id.starts_with(p));
    let ring = standard_ring();
    let ring = &ring;

    type Job<'a> = Box<dyn Fn() -> Vec<CheckResult> + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();
    if has("discriminant.build") {
        jobs.push(Box::new(|| vec![CheckResult::timed(|| discriminant_build(ring))]));
    }
    if has("discriminant.resultant") {
        jobs.push(Box::new(|| vec![CheckResult::timed(|| discriminant_resultant(ring))]));
    }
    if has("discriminant.restriction") {
        jobs.push(Box::new(|| {
            vec![CheckResult::timed(|| restriction_factorization_check(&build_discriminant::<Rational>(ring)))]
        }));
    }
    if has("discriminant.singular_locus") {
        jobs.push(Box::new(|| {
            vec![CheckResult::timed(|| singular_locus_check(&build_discriminant::<Rational>(ring)))]
        }));
    }
    if has("cremona.construction") {
        jobs.push(Box::new(|| vec![CheckResult::timed(|| construction(ring, &config.t_value))]));
    }
    if has_prefix("cremona.covariance") {
        let heavy = has("cremona.covariance");
        jobs.push(Box::new(move || covariance_group(ring, config, heavy)));
    }
    if has_prefix("cremona.inverse") {
        let heavy = has("cremona.inverse");
        jobs.push(Box::new(move || inverse_group(ring, config, heavy)));
    }
    if has_prefix("cremona.group_law") {
        let heavy = has("cremona.group_law");
        jobs.push(Box::new(move || group_law_group(ring, config, heavy)));
    }
    if has("cremona.degeneration") {
        jobs.push(Box::new(|| vec![CheckResult::timed(|| verify_degeneration::<Rational>(ring))]));
    }
    if has("cremona.coprimality") {
        jobs.push(Box::new(|| {
            vec![CheckResult::timed(|| certificate("cremona.coprimality", ring, &config.t_value, coprimality_certificate))]
        }));
    }
    if has("cremona.base_locus") {
        jobs.push(Box::new(|| {
            vec![CheckResult::timed(|| certificate("cremona.base_locus", ring, &config.t_value, base_locus_certificate))]
        }));
    }
    if has_prefix("mult.") || has("fano.verdict") {
        jobs.push(Box::new(|| multiplicity_group(ring, config.seed)));
    }

    let mut results: Vec<CheckResult> = jobs
        .par_iter()
        .flat_map_iter(|job| job())
        .filter(|r| has(&r.check_id))
        .collect();
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(results)
}
