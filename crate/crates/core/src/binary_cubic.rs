//! The discriminant of the normalized binary cubic and the curves it carries.
//!
//! A point `(x0:x1:x2:x3)` is read as the cubic
//! `F(T0,T1) = x0*T0^3 + 3*x1*T0^2*T1 + 3*x2*T0*T1^2 + x3*T1^3`.

use std::fmt;

use serde::Serialize;

use crate::check::{CheckResult, CheckStatus};
use crate::multiplicity::{mult_along_curve, MultiplicityError};
use crate::poly::{Monomial, Poly, PolyError, RingRef};
use crate::scalar::Scalar;

/// Normalization factors of the cubic's coefficients.
pub const NORMALIZATION: [i64; 4] = [1, 3, 3, 1];

/// Name of the parameter variable used for generic points of curves.
pub const CURVE_PARAMETER: &str = "lam";

#[derive(Clone, Debug, PartialEq)]
pub struct BinaryCubicCoefficients<C> {
    pub coords: [C; 4],
}

impl<C: Scalar> BinaryCubicCoefficients<C> {
    /// From the plain coefficients `a*T0^3 + b*T0^2*T1 + c*T0*T1^2 + d*T1^3`.
    pub fn from_form(a: C, b: C, c: C, d: C) -> Self {
        let three = C::from_int(3);
        BinaryCubicCoefficients {
            coords: [a, b / three.clone(), c / three, d],
        }
    }

    /// Plain coefficients of `F`, highest power of `T0` first.
    pub fn form(&self) -> [C; 4] {
        let mut out = self.coords.clone();
        for (c, n) in out.iter_mut().zip(NORMALIZATION) {
            *c = c.clone() * C::from_int(n);
        }
        out
    }

    pub fn evaluate_form(&self, t0: &C, t1: &C) -> C {
        let f = self.form();
        (0..4).fold(C::zero(), |acc, k| {
            acc + f[k].clone()
                * num_traits::pow(t0.clone(), 3 - k)
                * num_traits::pow(t1.clone(), k)
        })
    }
}

/// `x0^2*x3^2 - 3*x1^2*x2^2 - 6*x0*x1*x2*x3 + 4*x0*x2^3 + 4*x1^3*x3`.
pub fn build_discriminant<C: Scalar>(ring: &RingRef) -> Poly<C> {
    assert!(ring.geometric_count() >= 4, "ring needs four geometric variables");
    let n = ring.len();
    let mono = |e: [u32; 4]| {
        let mut exps = vec![0u32; n];
        exps[..4].copy_from_slice(&e);
        Monomial::from_exponents(&exps)
    };
    Poly::from_terms(
        ring,
        [
            (mono([2, 0, 0, 2]), C::from_int(1)),
            (mono([0, 2, 2, 0]), C::from_int(-3)),
            (mono([1, 1, 1, 1]), C::from_int(-6)),
            (mono([1, 0, 3, 0]), C::from_int(4)),
            (mono([0, 3, 0, 1]), C::from_int(4)),
        ],
    )
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<C: Scalar>(ring: &RingRef, matrix: &[Vec<Poly<C>>]) -> Poly<C> {
    let n = matrix.len();
    match n {
        0 => return Poly::one(ring),
        1 => return matrix[0][0].clone(),
        _ => {}
    }
    let mut total = Poly::zero(ring);
    for col in 0..n {
        let entry = &matrix[0][col];
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<C>>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry * &determinant(ring, &minor);
        total = if col % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

/// Sylvester matrix of two univariate polynomials given by coefficient
/// lists, leading coefficient first.
pub fn sylvester_matrix<C: Scalar>(
    ring: &RingRef,
    f: &[Poly<C>],
    g: &[Poly<C>],
) -> Vec<Vec<Poly<C>>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(f, n), (g, m)] {
        for shift in 0..shifts {
            let mut row = vec![Poly::zero(ring); size];
            for (k, c) in coeffs.iter().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_T(f, f')` for `f(T) = x0*T^3 + 3*x1*T^2 + 3*x2*T + x3`, computed as a
/// 5x5 Sylvester determinant. Equals `27*x0*D`.
pub fn discriminant_resultant_oracle<C: Scalar>(ring: &RingRef) -> Poly<C> {
    let x: Vec<Poly<C>> = (0..4).map(|i| Poly::var_at(ring, i)).collect();
    let k = |n: i64| C::from_int(n);
    let f: Vec<Poly<C>> = (0..4).map(|i| x[i].scale(&k(NORMALIZATION[i]))).collect();
    let df: Vec<Poly<C>> = (0..3)
        .map(|i| f[i].scale(&k(3 - i as i64)))
        .collect();
    determinant(ring, &sylvester_matrix(ring, &f, &df))
}

/// `x1^2 * (4*x1*x3 - 3*x2^2)`, the discriminant restricted to `x0 = 0`.
pub fn restricted_discriminant<C: Scalar>(ring: &RingRef) -> Poly<C> {
    let x: Vec<Poly<C>> = (0..4).map(|i| Poly::var_at(ring, i)).collect();
    let conic = (&x[1] * &x[3]).scale(&C::from_int(4)) - (&x[2] * &x[2]).scale(&C::from_int(3));
    &(&x[1] * &x[1]) * &conic
}

/// Sets `x0 = 0`.
pub fn restrict_to_plane<C: Scalar>(p: &Poly<C>) -> Result<Poly<C>, PolyError> {
    let zero = Poly::zero(p.ring());
    p.substitute(&[(p.ring().name(0), &zero)])
}

/// Checks `d(0, x1, x2, x3) == x1^2 * (4*x1*x3 - 3*x2^2)`.
pub fn restriction_factorization_check<C: Scalar>(d: &Poly<C>) -> CheckResult {
    const ID: &str = "discriminant.restriction";
    let lhs = match restrict_to_plane(d) {
        Ok(p) => p,
        Err(e) => return CheckResult::fail(ID, e.to_string()),
    };
    let rhs = restricted_discriminant(d.ring());
    if lhs == rhs {
        CheckResult::pass(ID, format!("D(0,x1,x2,x3) = {rhs}")).with_poly("restriction", &lhs)
    } else {
        CheckResult::fail(ID, format!("D(0,x1,x2,x3) = {lhs}, expected {rhs}"))
            .with_poly("restriction", &lhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CurveName {
    /// The line `x0 = x1 = 0`.
    L,
    /// The conic `x0 = 0, 4*x1*x3 - 3*x2^2 = 0`.
    C,
    /// The twisted cubic `(1 : lam : lam^2 : lam^3)`.
    T,
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveName::L => "L",
            CurveName::C => "C",
            CurveName::T => "T",
        };
        f.write_str(s)
    }
}

/// Generic point of a rational curve: four coordinates polynomial in `lam`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveParametrization<C> {
    pub name: CurveName,
    pub coords: [Poly<C>; 4],
    /// A coordinate that is a nonzero constant.
    pub chart_index: usize,
}

impl<C: Scalar> CurveParametrization<C> {
    fn build(ring: &RingRef, name: CurveName, coords: [&str; 4], chart_index: usize) -> Self {
        let coords = coords.map(|c| Poly::parse(c, ring).expect("curve coordinate parses"));
        CurveParametrization {
            name,
            coords,
            chart_index,
        }
    }

    pub fn line_l(ring: &RingRef) -> Self {
        Self::build(ring, CurveName::L, ["0", "0", "1", "lam"], 2)
    }

    pub fn conic_c(ring: &RingRef) -> Self {
        Self::build(ring, CurveName::C, ["0", "3", "2*lam", "lam^2"], 1)
    }

    pub fn twisted_cubic(ring: &RingRef) -> Self {
        Self::build(ring, CurveName::T, ["1", "lam", "lam^2", "lam^3"], 0)
    }

    pub fn ring(&self) -> &RingRef {
        self.coords[0].ring()
    }

    /// `p` evaluated along the curve, a polynomial in `lam` (and parameters).
    pub fn pull_back(&self, p: &Poly<C>) -> Result<Poly<C>, PolyError> {
        let ring = p.ring();
        let assignment: Vec<(&str, &Poly<C>)> =
            (0..4).map(|i| (ring.name(i), &self.coords[i])).collect();
        p.substitute(&assignment)
    }

    /// Coordinates at a specific parameter value.
    pub fn point_at(&self, value: &C) -> Result<[C; 4], PolyError> {
        let mut out: [C; 4] = std::array::from_fn(|_| C::zero());
        for (o, c) in out.iter_mut().zip(&self.coords) {
            *o = c.evaluate_named(&[(CURVE_PARAMETER, value.clone())])?;
        }
        Ok(out)
    }
}

/// Checks that the twisted cubic is singular on `d = 0`: every partial
/// derivative vanishes along it and `d` has multiplicity at least 2 there.
/// The multiplicity is reported under `mult_T`.
pub fn singular_locus_check<C: Scalar>(d: &Poly<C>) -> CheckResult {
    const ID: &str = "discriminant.singular_locus";
    let ring = d.ring();
    let twisted = CurveParametrization::twisted_cubic(ring);
    let mut nonvanishing = Vec::new();
    for i in 0..4 {
        match twisted.pull_back(&d.derivative(i)) {
            Ok(p) if p.is_zero() => {}
            Ok(p) => nonvanishing.push(format!("d/d{} -> {p}", ring.name(i))),
            Err(e) => return CheckResult::fail(ID, e.to_string()),
        }
    }
    let mult = match mult_along_curve(d, &twisted) {
        Ok(m) => m.value,
        Err(MultiplicityError::ZeroForm) => {
            return CheckResult::fail(ID, "form is identically zero")
        }
        Err(e) => return CheckResult::fail(ID, e.to_string()),
    };
    let status = if nonvanishing.is_empty() && mult >= 2 {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    let detail = if nonvanishing.is_empty() {
        format!("all partials vanish on T; mult_T = {mult}")
    } else {
        format!("partials not vanishing on T: {}", nonvanishing.join("; "))
    };
    CheckResult::new(ID, status, detail)
        .with_value("mult_T", mult)
        .with_value("partials_vanishing", nonvanishing.is_empty())
}
