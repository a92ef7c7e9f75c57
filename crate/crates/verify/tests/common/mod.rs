//! Corrupted inputs on which the exact check must fail and the randomized
//! pre-check must find a counterexample.

#![allow(dead_code)]

use cremona_core::binary_cubic::build_discriminant;
use cremona_core::cremona::{
    build_family, standard_ring, verify_covariance_of, verify_group_law_members, verify_inverse_pair,
    FamilyParameter,
};
use cremona_core::{rat, CheckResult, QCremonaMap, QFamilyMember, QPoly};
use cremona_verify::precheck::{covariance_precheck, group_law_precheck, inverse_precheck, DEFAULT_TRIALS};
use cremona_verify::probabilistic_identity_check;

pub struct Fixture {
    pub name: &'static str,
    pub full: Box<dyn Fn() -> CheckResult>,
    pub precheck: Box<dyn Fn(u64) -> CheckResult>,
}

fn member(p: &str) -> QFamilyMember {
    let ring = standard_ring();
    let expr = QPoly::parse(p, &ring).unwrap();
    build_family(&ring, FamilyParameter::Expr(expr)).unwrap()
}

fn equality(lhs: &QPoly, rhs: &QPoly) -> CheckResult {
    if lhs == rhs {
        CheckResult::pass("identity", "equal")
    } else {
        CheckResult::fail("identity", "not equal")
    }
}

pub fn fixtures() -> Vec<Fixture> {
    let ring = standard_ring();
    let d: QPoly = build_discriminant(&ring);
    let x0 = QPoly::var_at(&ring, 0);
    let mut out = Vec::new();

    {
        let (lhs, rhs) = (d.clone(), &d + &x0.pow(4));
        let (l2, r2) = (lhs.clone(), rhs.clone());
        out.push(Fixture {
            name: "D against D + x0^4",
            full: Box::new(move || equality(&lhs, &rhs)),
            precheck: Box::new(move |seed| probabilistic_identity_check(&l2, &r2, DEFAULT_TRIALS, seed)),
        });
    }
    {
        let t = member("t");
        let mut forms = t.forms().clone();
        forms[2] = &forms[2] + &x0.pow(13).scale(&rat(-1));
        let map = QCremonaMap::new(forms).unwrap();
        let m2 = map.clone();
        out.push(Fixture {
            name: "covariance with f2 perturbed by -x0^13",
            full: Box::new(move || verify_covariance_of(&map)),
            precheck: Box::new(move |seed| covariance_precheck(&m2, DEFAULT_TRIALS, seed)),
        });
    }
    {
        let t = member("t");
        let mut forms = t.forms().clone();
        forms[1] = forms[1].scale(&rat(2));
        let map = QCremonaMap::new(forms).unwrap();
        let m2 = map.clone();
        out.push(Fixture {
            name: "covariance with f1 doubled",
            full: Box::new(move || verify_covariance_of(&map)),
            precheck: Box::new(move |seed| covariance_precheck(&m2, DEFAULT_TRIALS, seed)),
        });
    }
    for (name, outer) in [("inverse with the sign of t kept", "t"), ("inverse with -2t", "-2*t")] {
        let inner = member("t");
        let outer = member(outer);
        out.push(Fixture {
            name,
            full: Box::new({
                let (o, i) = (outer.clone(), inner.clone());
                move || verify_inverse_pair(&o, &i)
            }),
            precheck: Box::new(move |seed| inverse_precheck(outer.map(), inner.map(), DEFAULT_TRIALS, seed)),
        });
    }
    for (name, sum) in [("group law against f_(s-t)", "s - t"), ("group law against f_(s+t+1)", "s + t + 1")] {
        let s = member("s");
        let t = member("t");
        let sum = member(sum);
        out.push(Fixture {
            name,
            full: Box::new({
                let (s, t, sum) = (s.clone(), t.clone(), sum.clone());
                move || verify_group_law_members(&s, &t, sum.map())
            }),
            precheck: Box::new(move |seed| {
                group_law_precheck(s.map(), t.map(), sum.map(), DEFAULT_TRIALS, seed)
            }),
        });
    }
    out
}

/// First seed in `0..100` whose pre-check fails.
pub fn first_failing_seed(f: &Fixture) -> Option<u64> {
    (0..100).find(|&seed| !(f.precheck)(seed).is_pass())
}
