use super::*;
use crate::binary_cubic::build_discriminant;
use crate::{rat, QPoly, Rational};
use num_rational::Rational64;
use num_traits::Zero;
use proptest::prelude::*;

fn ring() -> RingRef {
    RingDescriptor::standard()
}

fn p(s: &str) -> QPoly {
    QPoly::parse(s, &ring()).unwrap()
}

fn d() -> QPoly {
    build_discriminant(&ring())
}

fn point(x: [i64; 4]) -> Vec<Rational> {
    let mut v: Vec<Rational> = x.iter().map(|&n| rat(n)).collect();
    v.resize(ring().len(), rat(0));
    v
}

#[test]
fn add_examples() {
    assert!((&p("x0") + &p("-x0")).is_zero());
    assert_eq!(
        &p("x0^2*x3^2") + &p("-3*x1^2*x2^2"),
        p("x0^2*x3^2 - 3*x1^2*x2^2")
    );
    assert_eq!(&d() + &QPoly::zero(&ring()), d());
}

#[test]
fn mul_examples() {
    assert_eq!(&p("x0 + x1") * &p("x0 - x1"), p("x0^2 - x1^2"));
    // x0 * D, distributed by hand over the five terms.
    let x0d = &p("x0") * &d();
    assert_eq!(
        x0d,
        p("x0^3*x3^2 - 3*x0*x1^2*x2^2 - 6*x0^2*x1*x2*x3 + 4*x0^2*x2^3 + 4*x0*x1^3*x3")
    );
    assert_eq!(x0d.len(), 5);
    assert_eq!(x0d.total_degree(), 5);
    assert!((&d() * &QPoly::zero(&ring())).is_zero());
}

#[test]
fn ring_mismatch_is_an_error() {
    let other = RingDescriptor::new(&["a", "b"], 2).unwrap();
    let q = QPoly::var(&other, "a").unwrap();
    assert!(matches!(p("x0").try_add(&q), Err(PolyError::RingMismatch { .. })));
    assert!(matches!(p("x0").try_mul(&q), Err(PolyError::RingMismatch { .. })));
    assert!(p("x0").exact_div(&q).is_err());
}

#[test]
fn pow_examples() {
    assert_eq!(d().pow(0), QPoly::one(&ring()));
    assert_eq!(d().pow(1), d());
    assert_eq!(p("x0 + x1").pow(2), p("x0^2 + 2*x0*x1 + x1^2"));
    assert_eq!(d().pow(3), &(&d() * &d()) * &d());
}

#[test]
fn exact_div_examples() {
    let x0d3 = &p("x0") * &d().pow(3);
    assert_eq!(x0d3.exact_div(&d()).unwrap(), &p("x0") * &d().pow(2));
    assert_eq!(p("x0^2 - x1^2").exact_div(&p("x0 - x1")).unwrap(), p("x0 + x1"));
    assert_eq!(p("x0*x1 + x2").exact_div(&p("x0")), Err(PolyError::NotDivisible));
    assert_eq!(d().exact_div(&QPoly::zero(&ring())), Err(PolyError::DivisionByZero));
    // Remainder appears only after several reduction steps.
    let almost = &(&d() * &p("x0 + x2")) + &p("x3^5");
    assert_eq!(almost.exact_div(&d()), Err(PolyError::NotDivisible));
    assert_eq!(p("1/2*x0").exact_div(&p("2")).unwrap(), p("1/4*x0"));
}

#[test]
fn substitute_examples() {
    let identity: Vec<(&str, QPoly)> =
        ["x0", "x1", "x2", "x3"].iter().map(|n| (*n, p(n))).collect();
    let assignment: Vec<(&str, &QPoly)> = identity.iter().map(|(n, q)| (*n, q)).collect();
    assert_eq!(d().substitute(&assignment).unwrap(), d());
    assert_eq!(d().substitute(&[]).unwrap(), d());
    assert_eq!(
        p("x0*x3").substitute(&[("x0", &p("x0^2")), ("x3", &p("x1"))]).unwrap(),
        p("x0^2*x1")
    );
    // Twisted cubic in the parameters t, s standing for t0, t1.
    let img = [p("t^3"), p("t^2*s"), p("t*s^2"), p("s^3")];
    let a: Vec<(&str, &QPoly)> = ["x0", "x1", "x2", "x3"].into_iter().zip(img.iter()).collect();
    assert!(d().substitute(&a).unwrap().is_zero());
    // Simultaneous, not sequential.
    assert_eq!(
        p("x0 + 2*x1").substitute(&[("x0", &p("x1")), ("x1", &p("x0"))]).unwrap(),
        p("x1 + 2*x0")
    );
}

#[test]
fn substitute_into_other_ring() {
    let small = RingDescriptor::new(&["a", "b", "t"], 2).unwrap();
    let f = QPoly::parse("a^2*t + b", &small).unwrap();
    let out = f.substitute(&[("a", &p("x0")), ("b", &p("x1*x2"))]).unwrap();
    assert_eq!(out, p("x0^2*t + x1*x2"));
    let g = QPoly::parse("a + b", &small).unwrap();
    let other = RingDescriptor::new(&["q"], 1).unwrap();
    let q = QPoly::var(&other, "q").unwrap();
    assert!(matches!(
        g.substitute(&[("a", &p("x0")), ("b", &q)]),
        Err(PolyError::RingMismatch { .. })
    ));
}

#[test]
fn evaluate_examples() {
    assert_eq!(d().evaluate(&point([1, 0, 0, 1])).unwrap(), rat(1));
    assert_eq!(d().evaluate(&point([1, 1, 1, 1])).unwrap(), rat(0));
    assert_eq!(QPoly::zero(&ring()).evaluate(&point([3, 1, 4, 1])).unwrap(), rat(0));
    assert!(matches!(
        d().evaluate(&[rat(1)]),
        Err(PolyError::MissingAssignment(_))
    ));
    assert!(matches!(
        d().evaluate_named(&[("x0", rat(1))]),
        Err(PolyError::MissingAssignment(_))
    ));
    assert_eq!(
        d().evaluate_named(&[("x0", rat(1)), ("x1", rat(0)), ("x2", rat(0)), ("x3", rat(1))])
            .unwrap(),
        rat(1)
    );
}

#[test]
fn affine_slice_shift_examples() {
    let r = ring();
    let pt = |c: [&str; 4]| c.map(p);
    let local = RingDescriptor::standard().local().unwrap();
    let lp = |s: &str| QPoly::parse(s, &local).unwrap();

    let shifted = p("x0").affine_slice_shift(&pt(["0", "0", "1", "lam"]), 2).unwrap();
    assert_eq!(shifted, lp("y0"));

    let q = pt(["0", "0", "0", "1"]);
    let local_d = d().affine_slice_shift(&q, 3).unwrap();
    assert_eq!(local_d.min_geometric_degree(), Some(2));

    let shifted = p("x3").affine_slice_shift(&pt(["1", "lam", "lam^2", "lam^3"]), 0).unwrap();
    assert_eq!(shifted, lp("lam^3 + y3"));

    assert_eq!(
        p("x0").affine_slice_shift(&pt(["0", "0", "1", "lam"]), 0),
        Err(PolyError::BadChart(0))
    );
    assert_eq!(
        p("x0").affine_slice_shift(&pt(["0", "0", "1", "lam"]), 3),
        Err(PolyError::BadChart(3))
    );
    assert_eq!(
        p("x0 + x1^2").affine_slice_shift(&q, 3),
        Err(PolyError::NotHomogeneous)
    );
    let _ = r;
}

#[test]
fn parse_and_format() {
    let text = "x0^2*x3^2 - 3*x1^2*x2^2 - 6*x0*x1*x2*x3 + 4*x0*x2^3 + 4*x3*x1^3";
    assert_eq!(p(text), d());
    assert_eq!(
        d().to_string(),
        "x0^2*x3^2 - 6*x0*x1*x2*x3 + 4*x0*x2^3 + 4*x1^3*x3 - 3*x1^2*x2^2"
    );
    assert!(p("0").is_zero());
    assert_eq!(p("1/2*x0 + 1/2*x0"), p("x0"));
    assert_eq!(p("-x0 + 5").to_string(), "-x0 + 5");
    assert_eq!(p("1/2*x0 - 3/4").to_string(), "1/2*x0 - 3/4");
    assert_eq!(p("  x0 *x1^ 2 "), p("x0*x1^2"));
    assert_eq!(QPoly::zero(&ring()).to_string(), "0");
}

#[test]
fn parse_errors() {
    let err = QPoly::parse("x0 + y9", &ring()).unwrap_err();
    assert!(matches!(err, PolyError::Syntax { position: 5, .. }), "{err:?}");
    assert!(matches!(
        QPoly::parse("x0 +", &ring()),
        Err(PolyError::Syntax { position: 4, .. })
    ));
    assert!(matches!(QPoly::parse("x0 x1", &ring()), Err(PolyError::Syntax { .. })));
    assert!(matches!(QPoly::parse("", &ring()), Err(PolyError::Syntax { .. })));
    assert!(matches!(QPoly::parse("1/0*x0", &ring()), Err(PolyError::Syntax { .. })));
    assert!(matches!(QPoly::parse("x0^", &ring()), Err(PolyError::Syntax { .. })));
}

#[test]
fn derivative_and_degrees() {
    assert_eq!(d().derivative(0), p("2*x0*x3^2 - 6*x1*x2*x3 + 4*x2^3"));
    let f = p("t*x0^2 + x1*x2");
    assert_eq!(f.total_degree(), 3);
    assert_eq!(f.geometric_degree(), 2);
    assert!(f.is_homogeneous());
    assert!(!p("x0^2 + x1").is_homogeneous());
    assert_eq!(p("x0*x2 + x1^3").order_in(&[0, 1]), Some(1));
}

#[test]
fn generic_over_machine_rationals() {
    let r = ring();
    let a = Poly::<Rational64>::parse("x0 + 1/3*x1", &r).unwrap();
    let b = Poly::<Rational64>::parse("3*x0 - x1", &r).unwrap();
    let prod = &a * &b;
    assert_eq!(prod.to_string(), "3*x0^2 - 1/3*x1^2");
    assert_eq!(prod.exact_div(&b).unwrap(), a);
}

#[test]
fn format_is_deterministic_for_large_inputs() {
    let a = d().pow(5).to_string();
    let b = d().pow(5).to_string();
    assert_eq!(a, b);
    assert_eq!(p(&a), d().pow(5));
}

fn arb_poly() -> impl Strategy<Value = QPoly> {
    let term = (
        -9i64..=9,
        1i64..=3,
        prop::collection::vec(0u32..=2, 4),
    );
    prop::collection::vec(term, 0..=6).prop_map(|terms| {
        let r = ring();
        QPoly::from_terms(
            &r,
            terms.into_iter().map(|(n, den, e)| {
                let mut exps = e.clone();
                exps.resize(r.len(), 0);
                (Monomial::from_exponents(&exps), Rational::new(n.into(), den.into()))
            }),
        )
    })
}

fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-50i64..=50, 7).prop_map(|v| v.into_iter().map(rat).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_div_roundtrip(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), pt in arb_point()) {
        let ea = a.evaluate(&pt).unwrap();
        let eb = b.evaluate(&pt).unwrap();
        prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), &ea + &eb);
    }

    #[test]
    fn parse_inverts_format(a in arb_poly()) {
        prop_assert_eq!(QPoly::parse(&a.to_string(), &ring()).unwrap(), a);
    }

    #[test]
    fn canonical_order_and_degree(a in arb_poly(), b in arb_poly()) {
        let prod = &a * &b;
        let monos: Vec<&Monomial> = prod.terms().map(|(m, _)| m).collect();
        prop_assert!(monos.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(prod.terms().all(|(_, c)| !c.is_zero()));
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(prod.total_degree(), a.total_degree() + b.total_degree());
        }
    }

    #[test]
    fn substitution_multiplies_degrees(
        linear in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 11),
    ) {
        // Degree-3 form from three linear forms; degree-2 images from pairs.
        let lin: Vec<QPoly> = linear
            .iter()
            .map(|c| {
                let text = format!("{}*x0 + {}*x1 + {}*x2 + {}*x3", c[0], c[1], c[2], c[3]);
                p(&text.replace("+ -", "- "))
            })
            .collect();
        let f = &(&lin[0] * &lin[1]) * &lin[2];
        let images: Vec<QPoly> = (0..4).map(|i| &lin[3 + 2 * i] * &lin[4 + 2 * i]).collect();
        let names = ["x0", "x1", "x2", "x3"];
        let assignment: Vec<(&str, &QPoly)> = names.into_iter().zip(images.iter()).collect();
        let out = f.substitute(&assignment).unwrap();
        prop_assert!(out.is_homogeneous());
        if !out.is_zero() {
            prop_assert_eq!(out.geometric_degree(), 6);
        }
    }
}
