//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cremona_core::binary_cubic::{build_discriminant, CurveParametrization};
use cremona_core::cremona::{build_family, standard_ring, FamilyParameter};
use cremona_core::multiplicity::{
    fano_verdict_from_table, mult_at_point, mult_at_point_in_chart, multiplicity_table, point_q,
    ProjectivePoint,
};
use cremona_core::{rat, CheckResult, CheckStatus, Monomial, QPoly, Rational};
use cremona_verify::report::{exit_code, multiplicity_summary};
use cremona_verify::{run_checks, RunConfig};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::Value;

type Verdict = Result<String, String>;

fn run(ids: &[&str], fast: bool) -> Vec<CheckResult> {
    let config = RunConfig {
        selected_checks: Some(ids.iter().map(|s| s.to_string()).collect()),
        fast_only: fast,
        ..RunConfig::default()
    };
    run_checks(&config).expect("valid selection")
}

fn all_pass(results: &[CheckResult]) -> Result<(), String> {
    match results.iter().find(|r| !r.is_pass()) {
        None if !results.is_empty() => Ok(()),
        None => Err("no results".into()),
        Some(r) => Err(format!("{} {}: {}", r.check_id, r.status.as_str(), r.detail)),
    }
}

fn get<'a>(results: &'a [CheckResult], id: &str) -> &'a CheckResult {
    results.iter().find(|r| r.check_id == id).expect("check present")
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn discriminant() -> Verdict {
    let rs = run(&["discriminant.build", "discriminant.resultant", "discriminant.restriction"], false);
    all_pass(&rs)?;
    Ok("Res = 27 x0 D; D(0,x1,x2,x3) = x1^2 (4 x1 x3 - 3 x2^2)".into())
}

fn construction() -> Verdict {
    let rs = run(&["cremona.construction", "cremona.degeneration"], false);
    all_pass(&rs)?;
    Ok("four homogeneous forms of degree 13 in symbolic t; f_0 / D^3 = identity".into())
}

fn covariance() -> Verdict {
    let rs = run(&["cremona.covariance"], false);
    all_pass(&rs)?;
    let degree = &get(&rs, "cremona.covariance").computed["degree"];
    ensure(degree == 52, format!("degree {degree}"))?;
    Ok("D(f_t) = D^13 at degree 52".into())
}

fn inverse() -> Verdict {
    let start = Instant::now();
    let fast = run(&["cremona.inverse"], true);
    let fast_time = start.elapsed();
    all_pass(&fast)?;
    ensure(fast.len() == 1, "fast mode ran more than the pre-check")?;
    ensure(fast_time < Duration::from_secs(5), format!("fast pass took {fast_time:.2?}"))?;
    let full = run(&["cremona.inverse"], false);
    all_pass(&full)?;
    ensure(full.len() == 2, "missing pre-check or full check")?;
    Ok(format!("fast pass in {fast_time:.2?} agrees; f_(-t) ∘ f_t = x_i D^42 at degree 169"))
}

fn group_law() -> Verdict {
    let rs = run(&["cremona.group_law"], false);
    all_pass(&rs)?;
    Ok(format!("{} (s and t symbolic)", get(&rs, "cremona.group_law").detail))
}

fn base_locus() -> Verdict {
    let rs = run(&["cremona.base_locus"], false);
    all_pass(&rs)?;
    let computed = &get(&rs, "cremona.base_locus").computed;
    ensure(computed.len() == 4, "expected four certificate parts")?;
    ensure(computed.values().all(|v| v == &Value::Bool(true)), format!("{computed:?}"))?;
    Ok(format!("all of {:?} hold", computed.keys().collect::<Vec<_>>()))
}

fn singular_locus() -> Verdict {
    let rs = run(&["discriminant.singular_locus"], false);
    all_pass(&rs)?;
    let mult = &get(&rs, "discriminant.singular_locus").computed["mult_T"];
    ensure(mult == 2, format!("mult_T(D) = {mult}"))?;
    Ok("all partials of D vanish on T; mult_T(D) = 2".into())
}

fn multiplicity() -> Verdict {
    let rs = run(&["mult.table", "mult.stated.Q_f3", "mult.stated.C_f1"], false);
    all_pass(&rs)?;
    let summary = multiplicity_summary(&rs).ok_or("no table")?;
    let forms = |l: &str| summary[l]["forms"].clone();
    for (locus, expected) in [("L", [4, 4, 3, 3]), ("C", [4, 3, 3, 3]), ("Q", [7, 7, 7, 6])] {
        ensure(forms(locus) == serde_json::json!(expected), format!("{locus}: {}", forms(locus)))?;
    }
    Ok("L (4,4,3,3), C (4,3,3,3), Q (7,7,7,6), two methods per entry; mult_Q(f3) = 6, mult_C(f1) = 3".into())
}

fn fano(table: &cremona_core::multiplicity::MultiplicityTable) -> Verdict {
    let r = fano_verdict_from_table(13, table);
    ensure(r.is_pass(), r.detail.clone())?;
    let v = &r.computed["verdict"];
    ensure(v["point_min"] == 6 && v["curve_min"] == 3, format!("{v}"))?;
    ensure(v["point_threshold"] == "13/2" && v["curve_threshold"] == "13/4", format!("{v}"))?;
    Ok("min at Q = 6 <= 13/2; min along L and C = 3 <= 13/4".into())
}

fn discrepancy(full_run: &mut Option<Duration>) -> Verdict {
    let start = Instant::now();
    let rs = run_checks(&RunConfig::default()).map_err(|e| e.to_string())?;
    *full_run = Some(start.elapsed());
    let flagged: Vec<&CheckResult> =
        rs.iter().filter(|r| r.status == CheckStatus::PaperDiscrepancy).collect();
    ensure(flagged.len() == 1, format!("{} discrepancies", flagged.len()))?;
    let r = flagged[0];
    ensure(r.check_id == "mult.stated.L_f1", r.check_id.clone())?;
    ensure(r.paper_value.as_deref() == Some("3"), "stated value")?;
    let methods = r.computed["methods"].as_object().ok_or("methods")?;
    ensure(
        methods.len() == 2 && methods.values().all(|v| v == 4),
        format!("methods {methods:?}"),
    )?;
    ensure(rs.iter().all(|r| r.status != CheckStatus::Fail), "a check failed")?;
    ensure(exit_code(&rs, false) == 0 && exit_code(&rs, true) == 1, "exit codes")?;
    Ok(format!("only mult_L(f1): computed 4 by {:?}, stated 3; exit 0, strict exit 1", methods.keys().collect::<Vec<_>>()))
}

fn arb_poly(max_terms: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((prop::array::uniform4(0u32..4), -9i64..=9), 0..=max_terms).prop_map(|terms| {
        let ring = standard_ring();
        QPoly::from_terms(
            &ring,
            terms.into_iter().map(|(e, c)| {
                let mut exps = e.to_vec();
                exps.resize(ring.len(), 0);
                (Monomial::from_exponents(&exps), rat(c))
            }),
        )
    })
}

fn arb_values() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-50i64..=50, 7).prop_map(|v| v.into_iter().map(rat).collect())
}

fn linear_through(p: &[i64; 4], i: usize, j: usize) -> QPoly {
    let ring = standard_ring();
    &QPoly::var_at(&ring, i).scale(&rat(p[j])) - &QPoly::var_at(&ring, j).scale(&rat(p[i]))
}

fn arb_local() -> impl Strategy<Value = ([i64; 4], QPoly, QPoly)> {
    prop::array::uniform4(-5i64..=5)
        .prop_filter("nonzero", |p| p.iter().any(|&x| x != 0))
        .prop_flat_map(|p| {
            let factor = (0usize..4, 0usize..4, prop::array::uniform4(-3i64..=3));
            let form = prop::collection::vec(factor, 1..=3).prop_map(move |fs| {
                let ring = standard_ring();
                fs.into_iter().fold(QPoly::one(&ring), |acc, (i, j, c)| {
                    let through = linear_through(&p, i, j);
                    let lin = if !through.is_zero() {
                        through
                    } else {
                        (0..4).fold(QPoly::var_at(&ring, 0), |s, k| &s + &QPoly::var_at(&ring, k).scale(&rat(c[k])))
                    };
                    &acc * &lin
                })
            });
            (Just(p), form.clone(), form)
        })
}

fn properties(full_run: Option<Duration>) -> Verdict {
    let cases = |n| TestRunner::new(Config { cases: n, failure_persistence: None, ..Config::default() });

    cases(100)
        .run(&(arb_poly(6), arb_poly(6), arb_poly(6)), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &a.scale(&rat(-1))).is_zero());
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            Ok(())
        })
        .map_err(|e| format!("ring axioms: {e}"))?;
    cases(100)
        .run(&(arb_poly(6), arb_poly(5)), |(a, b)| {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            Ok(())
        })
        .map_err(|e| format!("exact_div roundtrip: {e}"))?;
    cases(100)
        .run(&(arb_poly(6), arb_poly(6), arb_values()), |(a, b, v)| {
            let (ea, eb) = (a.evaluate(&v).unwrap(), b.evaluate(&v).unwrap());
            prop_assert_eq!((&a * &b).evaluate(&v).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).evaluate(&v).unwrap(), &ea + &eb);
            Ok(())
        })
        .map_err(|e| format!("evaluation homomorphism: {e}"))?;
    cases(16)
        .run(&arb_local(), |(p, f, g)| {
            let point = ProjectivePoint::new(p.map(rat)).unwrap();
            let m = |h: &QPoly| mult_at_point(h, &point).unwrap().value;
            prop_assert_eq!(m(&(&f * &g)), m(&f) + m(&g));
            for chart in point.admissible_charts() {
                prop_assert_eq!(mult_at_point_in_chart(&f, &point, chart).unwrap(), m(&f));
            }
            prop_assert_eq!(mult_at_point(&f, &point.scaled(&rat(-7)).unwrap()).unwrap().value, m(&f));
            Ok(())
        })
        .map_err(|e| format!("multiplicity invariance: {e}"))?;

    let ring = standard_ring();
    let member = build_family(&ring, FamilyParameter::Value(rat(1))).map_err(|e| e.to_string())?;
    let d: QPoly = build_discriminant(&ring);
    let mut loci = vec![point_q()];
    for curve in [
        CurveParametrization::line_l(&ring),
        CurveParametrization::conic_c(&ring),
        CurveParametrization::twisted_cubic(&ring),
    ] {
        loci.push(ProjectivePoint::new(curve.point_at(&rat(2)).unwrap()).unwrap());
    }
    for point in &loci {
        for f in member.forms().iter().chain([&d]) {
            let base = mult_at_point(f, point).unwrap().value;
            for chart in point.admissible_charts() {
                ensure(mult_at_point_in_chart(f, point, chart).unwrap() == base, format!("chart {chart} at {point}"))?;
            }
            let scaled = point.scaled(&Rational::new(3.into(), (-5).into())).unwrap();
            ensure(mult_at_point(f, &scaled).unwrap().value == base, format!("scaling at {point}"))?;
            let dm = mult_at_point(&(f * &d), point).unwrap().value;
            ensure(dm == base + mult_at_point(&d, point).unwrap().value, format!("additivity at {point}"))?;
        }
    }

    let fixtures = common::fixtures();
    for f in &fixtures {
        ensure(common::first_failing_seed(f).is_some(), format!("no counterexample for {}", f.name))?;
    }
    let full = full_run.ok_or("full default run did not complete")?;
    ensure(full <= Duration::from_secs(20 * 60), format!("full run took {full:.2?}"))?;
    Ok(format!(
        "100 cases each for ring axioms, exact_div, evaluation; 16 random + {} distinguished loci for multiplicity; {} corrupted fixtures caught; full run {full:.2?}",
        loci.len(),
        fixtures.len()
    ))
}

fn report(n: u32, name: &str, limit: Duration, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let verdict = f();
    let elapsed = start.elapsed();
    let (ok, note) = match verdict {
        Ok(note) if elapsed <= limit => (true, note),
        Ok(note) => (false, format!("{note}; exceeded {limit:?}")),
        Err(e) => (false, e),
    };
    println!(
        "criterion {n:>2} {} {name} [{elapsed:.2?}, limit {limit:?}]: {note}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let ring = standard_ring();
    let member = build_family(&ring, FamilyParameter::Value(rat(1))).expect("t = 1 member");
    let table = multiplicity_table(member.map(), &build_discriminant(&ring), 0).expect("table");
    let mut full_run = None;

    let results = [
        report(1, "discriminant cross-validation", secs(1), discriminant),
        report(2, "construction", secs(1), construction),
        report(3, "covariance", secs(60), covariance),
        report(4, "inverse identity", secs(600), inverse),
        report(5, "group law", secs(900), group_law),
        report(6, "base locus", secs(30), base_locus),
        report(7, "singular locus", secs(10), singular_locus),
        report(8, "multiplicity table", secs(60), multiplicity),
        report(9, "fano verdict", secs(5), || fano(&table)),
        report(10, "discrepancy detection", secs(20 * 60), || discrepancy(&mut full_run)),
        report(11, "property suites", secs(20 * 60), || properties(full_run)),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
