//! The one-parameter family `f_t` of degree-13 Cremona transformations.
//!
//! With `D` the discriminant of the binary cubic:
//!
//! ```text
//! f0 = x0 D^3
//! f1 = x1 D^3 + t x0^5 D^2
//! f2 = x2 D^3 + 2t x1 x0^4 D^2 + t^2 x0^9 D
//! f3 = x3 D^3 + 3t x2 x0^4 D^2 + 3t^2 x1 x0^8 D + t^3 x0^13
//! ```
//!
//! Each member keeps its forms both expanded and as a template in an extra
//! variable `d` standing for `D`. Since `f_i(x) = G_i(x, D(x))`, composing
//! `f ∘ h` only needs `G_i(h, D(h))`, which avoids expanding every monomial
//! of the degree-13 forms against `h`.

use thiserror::Error;

use crate::binary_cubic::{build_discriminant, restrict_to_plane, restriction_factorization_check, CurveParametrization};
use crate::check::{CheckResult, CheckStatus};
use crate::poly::{Poly, PolyError, RingDescriptor, RingRef};
use crate::scalar::Scalar;
use crate::univariate::{quartic_irreducibility, QuarticVerdict};
use crate::Rational;

/// Common degree of the family's forms.
pub const FAMILY_DEGREE: u32 = 13;

/// Name of the template variable standing for the discriminant.
const DISCRIMINANT_VAR: &str = "d";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CremonaError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("form {0} is not homogeneous of the common degree")]
    NotHomogeneous(usize),
    #[error("all forms are zero")]
    AllZero,
    #[error("form {component} is not divisible by the claimed factor")]
    NotDivisible { component: usize },
    #[error("parameter must have degree zero in the geometric variables")]
    GeometricParameter,
}

/// Four homogeneous forms of a common degree in `x0..x3`.
#[derive(Clone, Debug, PartialEq)]
pub struct CremonaMap<C> {
    forms: [Poly<C>; 4],
    degree: u32,
}

impl<C: Scalar> CremonaMap<C> {
    pub fn new(forms: [Poly<C>; 4]) -> Result<Self, CremonaError> {
        let ring = forms[0].ring().clone();
        for f in &forms[1..] {
            if f.ring() != &ring {
                return Err(PolyError::RingMismatch {
                    left: ring.to_string(),
                    right: f.ring().to_string(),
                }
                .into());
            }
        }
        let degree = forms
            .iter()
            .find(|f| !f.is_zero())
            .map(|f| f.geometric_degree())
            .ok_or(CremonaError::AllZero)?;
        for (i, f) in forms.iter().enumerate() {
            if !f.is_homogeneous() || (!f.is_zero() && f.geometric_degree() != degree) {
                return Err(CremonaError::NotHomogeneous(i));
            }
        }
        Ok(CremonaMap { forms, degree })
    }

    pub fn identity(ring: &RingRef) -> Self {
        Self::new(std::array::from_fn(|i| Poly::var_at(ring, i))).expect("coordinates are linear forms")
    }

    pub fn forms(&self) -> &[Poly<C>; 4] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &RingRef {
        self.forms[0].ring()
    }

    /// Substitutes `images` for `x0..x3` in `p`.
    pub fn pull_back(&self, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
        let names = p.ring().names();
        let assignment: Vec<(&str, &Poly<C>)> =
            (0..4).map(|i| (names[i].as_str(), &self.forms[i])).collect();
        p.substitute(&assignment)
    }

    /// Replaces a parameter by a constant in every form.
    pub fn specialize(&self, var: &str, value: C) -> Result<Self, CremonaError> {
        let c = Poly::constant(self.ring(), value);
        let forms = self
            .forms
            .iter()
            .map(|f| f.substitute(&[(var, &c)]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(forms.try_into().expect("four forms"))
    }
}

/// `g ∘ h`: substitutes the forms of `h` into those of `g`.
pub fn compose<C: Scalar>(g: &CremonaMap<C>, h: &CremonaMap<C>) -> Result<CremonaMap<C>, CremonaError> {
    let forms = g
        .forms
        .iter()
        .map(|f| h.pull_back(f))
        .collect::<Result<Vec<_>, _>>()?;
    CremonaMap::new(forms.try_into().expect("four forms"))
}

/// Divides every form by `factor^exponent`.
pub fn cancel_common_factor<C: Scalar>(
    m: &CremonaMap<C>,
    factor: &Poly<C>,
    exponent: u32,
) -> Result<CremonaMap<C>, CremonaError> {
    let divisor = factor.pow(exponent);
    let forms = m
        .forms
        .iter()
        .enumerate()
        .map(|(i, f)| match f.exact_div(&divisor) {
            Ok(q) => Ok(q),
            Err(PolyError::NotDivisible) => Err(CremonaError::NotDivisible { component: i }),
            Err(e) => Err(e.into()),
        })
        .collect::<Result<Vec<_>, _>>()?;
    CremonaMap::new(forms.try_into().expect("four forms"))
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyParameter<C> {
    /// A parameter variable of the ring, e.g. `t`.
    Symbolic(String),
    Value(C),
    /// Any polynomial of geometric degree zero, e.g. `s + t`.
    Expr(Poly<C>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMember<C> {
    label: String,
    parameter: Poly<C>,
    map: CremonaMap<C>,
    template: [Poly<C>; 4],
}

impl<C: Scalar> FamilyMember<C> {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn parameter(&self) -> &Poly<C> {
        &self.parameter
    }

    pub fn map(&self) -> &CremonaMap<C> {
        &self.map
    }

    pub fn forms(&self) -> &[Poly<C>; 4] {
        self.map.forms()
    }

    pub fn ring(&self) -> &RingRef {
        self.map.ring()
    }

    /// Forms as polynomials in `x0..x3` and `d`, where `d` stands for `D`.
    pub fn template(&self) -> &[Poly<C>; 4] {
        &self.template
    }
}

fn template_ring(ring: &RingRef) -> Result<RingRef, PolyError> {
    match ring.index_of(DISCRIMINANT_VAR) {
        Some(_) => Ok(ring.clone()),
        None => ring.extended(&[DISCRIMINANT_VAR]),
    }
}

/// Builds `f_p` for a parameter `p`.
pub fn build_family<C: Scalar>(
    ring: &RingRef,
    parameter: FamilyParameter<C>,
) -> Result<FamilyMember<C>, CremonaError> {
    let (label, p) = match parameter {
        FamilyParameter::Symbolic(name) => {
            let p = Poly::var(ring, &name)?;
            (name, p)
        }
        FamilyParameter::Value(v) => (v.to_string(), Poly::constant(ring, v)),
        FamilyParameter::Expr(p) => (p.to_string(), p),
    };
    if p.geometric_degree() != 0 {
        return Err(CremonaError::GeometricParameter);
    }
    let tring = template_ring(ring)?;
    let x = |i: usize| Poly::<C>::var_at(&tring, i);
    let d = Poly::<C>::var(&tring, DISCRIMINANT_VAR)?;
    let tp = p.embed(&tring)?;
    let k = |n: i64| C::from_int(n);
    let x0 = x(0);
    let template = [
        &x0 * &d.pow(3),
        &x(1) * &d.pow(3) + &tp * &(&x0.pow(5) * &d.pow(2)),
        &x(2) * &d.pow(3)
            + (&tp * &(&(&x(1) * &x0.pow(4)) * &d.pow(2))).scale(&k(2))
            + &tp.pow(2) * &(&x0.pow(9) * &d),
        &x(3) * &d.pow(3)
            + (&tp * &(&(&x(2) * &x0.pow(4)) * &d.pow(2))).scale(&k(3))
            + (&tp.pow(2) * &(&(&x(1) * &x0.pow(8)) * &d)).scale(&k(3))
            + &tp.pow(3) * &x0.pow(13),
    ];
    let disc = build_discriminant::<C>(ring);
    let forms = template
        .iter()
        .map(|g| g.substitute(&[(DISCRIMINANT_VAR, &disc)]))
        .collect::<Result<Vec<_>, _>>()?;
    let map = CremonaMap::new(forms.try_into().expect("four forms"))?;
    if map.degree() != FAMILY_DEGREE {
        return Err(CremonaError::NotHomogeneous(0));
    }
    Ok(FamilyMember {
        label,
        parameter: p,
        map,
        template,
    })
}

/// `g ∘ h` for a family member `g`, via `G_i(h, D(h))`.
pub fn compose_member<C: Scalar>(
    g: &FamilyMember<C>,
    h: &CremonaMap<C>,
) -> Result<CremonaMap<C>, CremonaError> {
    let disc = build_discriminant::<C>(h.ring());
    let disc_of_h = h.pull_back(&disc)?;
    let tring = g.template[0].ring();
    let names: Vec<&str> = (0..4).map(|i| tring.name(i)).collect();
    let mut assignment: Vec<(&str, &Poly<C>)> =
        names.iter().copied().zip(h.forms().iter()).collect();
    assignment.push((DISCRIMINANT_VAR, &disc_of_h));
    let forms = g
        .template
        .iter()
        .map(|t| t.substitute(&assignment))
        .collect::<Result<Vec<_>, _>>()?;
    CremonaMap::new(forms.try_into().expect("four forms"))
}

fn first_difference<C: Scalar>(lhs: &Poly<C>, rhs: &Poly<C>) -> String {
    match (lhs - rhs).leading_term() {
        Some((m, c)) => {
            let t = Poly::term(lhs.ring(), m.clone(), c.clone());
            format!("first differing term {t}")
        }
        None => "equal".into(),
    }
}

/// `D(f0, f1, f2, f3) == D^13`.
pub fn verify_covariance<C: Scalar>(member: &FamilyMember<C>) -> CheckResult {
    verify_covariance_of(member.map())
}

pub fn verify_covariance_of<C: Scalar>(map: &CremonaMap<C>) -> CheckResult {
    const ID: &str = "cremona.covariance";
    let disc = build_discriminant::<C>(map.ring());
    let lhs = match map.pull_back(&disc) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(ID, e.to_string()),
    };
    let rhs = disc.pow(map.degree());
    let ok = lhs == rhs;
    let detail = if ok {
        format!("D(f) = D^{} ({} terms, degree {})", map.degree(), lhs.len(), lhs.geometric_degree())
    } else {
        format!("D(f) != D^{}: {}", map.degree(), first_difference(&lhs, &rhs))
    };
    CheckResult::new(ID, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
        .with_poly("D_of_f", &lhs)
        .with_value("degree", lhs.geometric_degree())
}

/// `f_{-p} ∘ f_p == (x_i D^42)`.
pub fn verify_inverse_identity<C: Scalar>(ring: &RingRef, parameter: FamilyParameter<C>) -> CheckResult {
    let inner = match build_family(ring, parameter) {
        Ok(m) => m,
        Err(e) => return CheckResult::fail("cremona.inverse", e.to_string()),
    };
    let neg = FamilyParameter::Expr(-inner.parameter());
    let outer = match build_family(ring, neg) {
        Ok(m) => m,
        Err(e) => return CheckResult::fail("cremona.inverse", e.to_string()),
    };
    verify_inverse_pair(&outer, &inner)
}

/// `outer ∘ inner == (x_i D^42)`, for checking arbitrary pairs.
pub fn verify_inverse_pair<C: Scalar>(outer: &FamilyMember<C>, inner: &FamilyMember<C>) -> CheckResult {
    const ID: &str = "cremona.inverse";
    let composed = match compose_member(outer, inner.map()) {
        Ok(m) => m,
        Err(e) => return CheckResult::fail(ID, e.to_string()),
    };
    let ring = inner.ring();
    let exponent = (composed.degree() - 1) / 4;
    let cofactor = build_discriminant::<C>(ring).pow(exponent);
    let mut mismatches = Vec::new();
    for (i, f) in composed.forms().iter().enumerate() {
        let expected = &Poly::var_at(ring, i) * &cofactor;
        if *f != expected {
            mismatches.push(format!("component {i}: {}", first_difference(f, &expected)));
        }
    }
    let ok = mismatches.is_empty() && composed.degree() == 169 && exponent == 42;
    let detail = if ok {
        format!("f_({}) ∘ f_({}) = x_i D^42 at degree {}", outer.label(), inner.label(), composed.degree())
    } else if mismatches.is_empty() {
        format!("unexpected degree {}", composed.degree())
    } else {
        mismatches.join("; ")
    };
    let mut r = CheckResult::new(ID, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
        .with_value("degree", composed.degree())
        .with_value("cofactor_exponent", exponent);
    for (i, f) in composed.forms().iter().enumerate() {
        r = r.with_poly(&format!("component{i}"), f);
    }
    r
}

/// `f_s ∘ f_t == D^39 f_{s+t}`, the cofactor recovered by exact division.
pub fn verify_group_law<C: Scalar>(ring: &RingRef) -> CheckResult {
    verify_group_law_with::<C>(
        ring,
        FamilyParameter::Symbolic("s".into()),
        FamilyParameter::Symbolic("t".into()),
    )
}

pub fn verify_group_law_with<C: Scalar>(
    ring: &RingRef,
    s: FamilyParameter<C>,
    t: FamilyParameter<C>,
) -> CheckResult {
    let run = || -> Result<CheckResult, CremonaError> {
        let fs = build_family(ring, s)?;
        let ft = build_family(ring, t)?;
        let sum = fs.parameter() + ft.parameter();
        let fsum = build_family(ring, FamilyParameter::Expr(sum))?;
        Ok(verify_group_law_members(&fs, &ft, fsum.map()))
    };
    run().unwrap_or_else(|e| CheckResult::fail("cremona.group_law", e.to_string()))
}

/// `outer ∘ inner == D^e sum` with `e` fixed by degree bookkeeping.
pub fn verify_group_law_members<C: Scalar>(
    outer: &FamilyMember<C>,
    inner: &FamilyMember<C>,
    sum: &CremonaMap<C>,
) -> CheckResult {
    const ID: &str = "cremona.group_law";
    let run = || -> Result<CheckResult, CremonaError> {
        let composed = compose_member(outer, inner.map())?;
        let expected_exponent = (composed.degree() - sum.degree()) / 4;
        let disc = build_discriminant::<C>(inner.ring());
        let cofactor = disc.pow(expected_exponent);
        let mut failures = Vec::new();
        for i in 0..4 {
            match composed.forms()[i].exact_div(&sum.forms()[i]) {
                Ok(q) if q == cofactor => {}
                Ok(q) => failures.push(format!(
                    "component {i}: quotient has {} terms, degree {}, not D^{expected_exponent}",
                    q.len(),
                    q.geometric_degree()
                )),
                Err(PolyError::NotDivisible) => {
                    failures.push(format!("component {i}: the sum member does not divide"))
                }
                Err(e) => return Err(e.into()),
            }
        }
        let ok = failures.is_empty() && expected_exponent == 39;
        let detail = if ok {
            format!("f_({}) ∘ f_({}) = D^39 f_sum", outer.label(), inner.label())
        } else {
            failures.join("; ")
        };
        Ok(CheckResult::new(ID, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
            .with_value("degree", composed.degree())
            .with_value("cofactor_exponent", expected_exponent))
    };
    run().unwrap_or_else(|e| CheckResult::fail(ID, e.to_string()))
}

/// `f_0` cancels by `D^3` to the identity map.
pub fn verify_degeneration<C: Scalar>(ring: &RingRef) -> CheckResult {
    const ID: &str = "cremona.degeneration";
    let run = || -> Result<CheckResult, CremonaError> {
        let f0 = build_family(ring, FamilyParameter::Value(C::zero()))?;
        let disc = build_discriminant::<C>(ring);
        let reduced = cancel_common_factor(f0.map(), &disc, 3)?;
        let ok = reduced == CremonaMap::identity(ring);
        Ok(CheckResult::new(
            ID,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            if ok {
                "f_0 / D^3 = (x0, x1, x2, x3)".to_string()
            } else {
                "f_0 / D^3 is not the identity".to_string()
            },
        )
        .with_value("reduced_degree", reduced.degree()))
    };
    run().unwrap_or_else(|e| CheckResult::fail(ID, e.to_string()))
}

/// A line `P + u Q` on which `D` restricts to an irreducible quartic.
#[derive(Clone, Debug, PartialEq)]
pub struct IrreducibilityWitness {
    pub base: [i64; 4],
    pub direction: [i64; 4],
    pub restriction: Vec<Rational>,
    pub rejected: usize,
}

fn restrict_to_line(d: &Poly<Rational>, base: [i64; 4], direction: [i64; 4]) -> Result<Vec<Rational>, PolyError> {
    // Univariate ring in u: reuse the standard layout with `lam` as u.
    let ring = d.ring();
    let u = Poly::var(ring, crate::binary_cubic::CURVE_PARAMETER)?;
    let coords: Vec<Poly<Rational>> = (0..4)
        .map(|i| &Poly::constant(ring, crate::rat(base[i])) + &u.scale(&crate::rat(direction[i])))
        .collect();
    let names = ring.names();
    let assignment: Vec<(&str, &Poly<Rational>)> =
        (0..4).map(|i| (names[i].as_str(), &coords[i])).collect();
    let g = d.substitute(&assignment)?;
    let index = ring.index_of(crate::binary_cubic::CURVE_PARAMETER).expect("parameter exists");
    let mut out = vec![crate::rat(0); g.total_degree() as usize + 1];
    for (m, c) in g.terms() {
        out[m.exponents()[index] as usize] = c.clone();
    }
    Ok(out)
}

fn candidate_lines() -> impl Iterator<Item = ([i64; 4], [i64; 4])> {
    // The suggested first line (1, u, 0, 1) leads the systematic search.
    let first = std::iter::once(([1, 0, 0, 1], [0, 1, 0, 0]));
    let vals = [0i64, 1, -1, 2];
    let vectors: Vec<[i64; 4]> = (0..256)
        .map(|n| std::array::from_fn(|i| vals[(n >> (2 * i)) & 3]))
        .filter(|v: &[i64; 4]| v.iter().any(|&x| x != 0))
        .collect();
    let pairs: Vec<([i64; 4], [i64; 4])> = vectors
        .iter()
        .flat_map(|p| vectors.iter().map(move |q| (*p, *q)))
        .collect();
    first.chain(pairs)
}

/// Searches lines for an irreducible degree-4 restriction of `D`, which
/// certifies that `D` is irreducible over Q.
pub fn discriminant_irreducibility_witness(d: &Poly<Rational>) -> Option<IrreducibilityWitness> {
    let mut rejected = 0;
    for (base, direction) in candidate_lines() {
        let restriction = match restrict_to_line(d, base, direction) {
            Ok(r) => r,
            Err(_) => continue,
        };
        match quartic_irreducibility(&restriction) {
            Ok(QuarticVerdict::Irreducible) => {
                return Some(IrreducibilityWitness {
                    base,
                    direction,
                    restriction,
                    rejected,
                })
            }
            _ => rejected += 1,
        }
    }
    None
}

/// Certifies that the forms of a member with nonzero parameter have no
/// common non-constant factor.
///
/// A common factor divides `f0 = x0 D^3`, so it is a product of `x0` and
/// `D`. `x0` does not divide `f3` because `f3(0, x1, x2, x3) = x3 D(0,..)^3`
/// is nonzero; `D` does not divide `f3` because `f3 ≡ p^3 x0^13 (mod D)`
/// with `p != 0`, and `D` is irreducible of degree 4.
pub fn coprimality_certificate(member: &FamilyMember<Rational>) -> CheckResult {
    const ID: &str = "cremona.coprimality";
    let p = member.parameter();
    if p.is_zero() {
        return CheckResult::skipped(ID, "refused: parameter is zero, all four forms share the factor D^3");
    }
    let run = || -> Result<CheckResult, CremonaError> {
        let ring = member.ring();
        let d = build_discriminant::<Rational>(ring);
        let f3 = &member.forms()[3];
        let x0 = Poly::var_at(ring, 0);
        let x3 = Poly::var_at(ring, 3);

        let f3_plane = restrict_to_plane(f3)?;
        let expected_plane = &x3 * &restrict_to_plane(&d)?.pow(3);
        if f3_plane.is_zero() || f3_plane != expected_plane {
            return Ok(CheckResult::fail(ID, "f3(0,x1,x2,x3) != x3 D(0,x1,x2,x3)^3"));
        }
        let tail = &p.pow(3) * &x0.pow(13);
        if (f3 - &tail).exact_div(&d).is_err() {
            return Ok(CheckResult::fail(ID, "f3 - p^3 x0^13 is not divisible by D"));
        }
        let Some(w) = discriminant_irreducibility_witness(&d) else {
            return Ok(CheckResult::fail(ID, "no irreducibility witness line found for D"));
        };
        let restriction: Vec<String> = w.restriction.iter().map(|c| c.to_string()).collect();
        Ok(CheckResult::pass(
            ID,
            format!(
                "x0 does not divide f3; f3 = {}^3 x0^13 mod D; D irreducible via line {:?} + u {:?}",
                member.label(),
                w.base,
                w.direction
            ),
        )
        .with_value("witness_base", w.base.to_vec())
        .with_value("witness_direction", w.direction.to_vec())
        .with_value("witness_restriction", restriction)
        .with_value("rejected_lines", w.rejected))
    };
    run().unwrap_or_else(|e| CheckResult::fail(ID, e.to_string()))
}

/// The base-locus case analysis as polynomial identities:
/// 1. every form vanishes along `L` and `C`;
/// 2. on `x0 = 0`, `f_i = x_i D^3` for `i = 1, 2, 3`;
/// 3. `D^2 | f1 - x1 D^3`, `D | f2 - x2 D^3`, `D | f3 - p^3 x0^13`;
/// 4. `D(0, x1, x2, x3) = x1^2 (4 x1 x3 - 3 x2^2)`.
pub fn base_locus_certificate(member: &FamilyMember<Rational>) -> CheckResult {
    const ID: &str = "cremona.base_locus";
    if member.parameter().is_zero() {
        return CheckResult::skipped(ID, "parameter is zero");
    }
    let run = || -> Result<CheckResult, CremonaError> {
        let ring = member.ring();
        let d = build_discriminant::<Rational>(ring);
        let forms = member.forms();
        let mut failures = Vec::new();

        for curve in [CurveParametrization::line_l(ring), CurveParametrization::conic_c(ring)] {
            for (i, f) in forms.iter().enumerate() {
                if !curve.pull_back(f)?.is_zero() {
                    failures.push(format!("f{i} does not vanish on {}", curve.name));
                }
            }
        }
        let vanishing = failures.is_empty();

        let before = failures.len();
        let d_plane = restrict_to_plane(&d)?.pow(3);
        for (i, f) in forms.iter().enumerate().skip(1) {
            let expected = &Poly::var_at(ring, i) * &d_plane;
            if restrict_to_plane(f)? != expected {
                failures.push(format!("f{i}(0,x1,x2,x3) != x{i} D(0,x1,x2,x3)^3"));
            }
        }
        let plane_case = failures.len() == before;

        let d3 = d.pow(3);
        let divisibility = [
            (&forms[1] - &(&Poly::var_at(ring, 1) * &d3), d.pow(2), "D^2 | f1 - x1 D^3"),
            (&forms[2] - &(&Poly::var_at(ring, 2) * &d3), d.clone(), "D | f2 - x2 D^3"),
            (
                &forms[3] - &(&member.parameter().pow(3) * &Poly::var_at(ring, 0).pow(13)),
                d.clone(),
                "D | f3 - p^3 x0^13",
            ),
        ];
        let mut divisible = true;
        for (p, q, what) in divisibility {
            if p.exact_div(&q).is_err() {
                divisible = false;
                failures.push(format!("{what} fails"));
            }
        }

        let restriction = restriction_factorization_check(&d);
        if !restriction.is_pass() {
            failures.push(restriction.detail.clone());
        }
        let ok = failures.is_empty();
        Ok(CheckResult::new(
            ID,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            if ok {
                "forms vanish on L and C; x0=0, D!=0 and D=0, x0!=0 excluded; {x0=0, D=0} = L ∪ C".to_string()
            } else {
                failures.join("; ")
            },
        )
        .with_value("vanish_on_L_and_C", vanishing)
        .with_value("plane_case_excluded", plane_case)
        .with_value("discriminant_case_excluded", divisible)
        .with_value("restriction_factorization", restriction.is_pass()))
    };
    run().unwrap_or_else(|e| CheckResult::fail(ID, e.to_string()))
}

/// Ring used by the verifier: `x0..x3`, parameters `t, s`, curve parameter `lam`.
pub fn standard_ring() -> RingRef {
    RingDescriptor::standard()
}
