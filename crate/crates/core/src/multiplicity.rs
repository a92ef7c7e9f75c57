//! Multiplicities of forms at points and along curves.
//!
//! Three methods are available: the local expansion at a (generic) point,
//! the order along an ideal generated by coordinate variables, and
//! specialization of a curve's generic point at random parameter values.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::binary_cubic::{CurveName, CurveParametrization};
use crate::check::{CheckResult, CheckStatus};
use crate::cremona::CremonaMap;
use crate::poly::{Poly, PolyError};
use crate::scalar::Scalar;
use crate::Rational;

/// Range of the random integers used for specializations and coefficients.
pub const RANDOM_RANGE: std::ops::RangeInclusive<i64> = -1000..=1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplicityError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("multiplicity of the zero form is undefined")]
    ZeroForm,
    #[error("empty variable set")]
    EmptyVariableSet,
    #[error("all coordinates of a projective point are zero")]
    ZeroPoint,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectivePoint<C> {
    coords: [C; 4],
}

impl<C: Scalar> ProjectivePoint<C> {
    pub fn new(coords: [C; 4]) -> Result<Self, MultiplicityError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(MultiplicityError::ZeroPoint);
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[C; 4] {
        &self.coords
    }

    /// Coordinate of largest absolute value, ties to the smallest index.
    pub fn chart(&self) -> usize {
        let mut best = 0;
        for i in 1..4 {
            if self.coords[i].abs() > self.coords[best].abs() {
                best = i;
            }
        }
        best
    }

    pub fn scaled(&self, c: &C) -> Result<Self, MultiplicityError> {
        Self::new(self.coords.clone().map(|x| x * c.clone()))
    }

    /// Indices of the nonzero coordinates, each a valid chart.
    pub fn admissible_charts(&self) -> Vec<usize> {
        (0..4).filter(|&i| !self.coords[i].is_zero()).collect()
    }
}

impl<C: Scalar> fmt::Display for ProjectivePoint<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coords;
        write!(f, "({}:{}:{}:{})", c[0], c[1], c[2], c[3])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicityMethod {
    GenericPoint,
    AffineShift,
    IdealOrder,
    RandomSpecialization,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityResult {
    pub value: u32,
    pub method: MultiplicityMethod,
    pub locus: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Locus<C> {
    Point(ProjectivePoint<C>),
    Curve(CurveParametrization<C>),
}

impl<C: Scalar> Locus<C> {
    pub fn label(&self) -> String {
        match self {
            Locus::Point(p) => p.to_string(),
            Locus::Curve(c) => c.name.to_string(),
        }
    }
}

fn local_order<C: Scalar>(
    f: &Poly<C>,
    point: &[Poly<C>],
    chart: usize,
) -> Result<u32, MultiplicityError> {
    if f.is_zero() {
        return Err(MultiplicityError::ZeroForm);
    }
    if !f.is_homogeneous() {
        return Err(PolyError::NotHomogeneous.into());
    }
    let local = f.affine_slice_shift(point, chart)?;
    local.min_geometric_degree().ok_or(MultiplicityError::ZeroForm)
}

/// Multiplicity at a rational point in a chosen chart.
pub fn mult_at_point_in_chart<C: Scalar>(
    f: &Poly<C>,
    p: &ProjectivePoint<C>,
    chart: usize,
) -> Result<u32, MultiplicityError> {
    let point: Vec<Poly<C>> = p
        .coords
        .iter()
        .map(|c| Poly::constant(f.ring(), c.clone()))
        .collect();
    local_order(f, &point, chart)
}

/// Minimum total degree of the local expansion at `p`, in the chart of the
/// largest coordinate.
pub fn mult_at_point<C: Scalar>(
    f: &Poly<C>,
    p: &ProjectivePoint<C>,
) -> Result<MultiplicityResult, MultiplicityError> {
    Ok(MultiplicityResult {
        value: mult_at_point_in_chart(f, p, p.chart())?,
        method: MultiplicityMethod::AffineShift,
        locus: p.to_string(),
    })
}

/// Multiplicity at the generic point of a curve: the smallest local degree
/// whose coefficient is nonzero as a polynomial in the curve parameter.
pub fn mult_along_curve<C: Scalar>(
    f: &Poly<C>,
    curve: &CurveParametrization<C>,
) -> Result<MultiplicityResult, MultiplicityError> {
    Ok(MultiplicityResult {
        value: local_order(f, &curve.coords, curve.chart_index)?,
        method: MultiplicityMethod::GenericPoint,
        locus: curve.name.to_string(),
    })
}

/// Order of `f` in the ideal generated by the variables `vars`.
pub fn ideal_order<C: Scalar>(f: &Poly<C>, vars: &[usize]) -> Result<u32, MultiplicityError> {
    if vars.is_empty() {
        return Err(MultiplicityError::EmptyVariableSet);
    }
    f.order_in(vars).ok_or(MultiplicityError::ZeroForm)
}

pub fn mult_on_locus<C: Scalar>(
    f: &Poly<C>,
    locus: &Locus<C>,
) -> Result<MultiplicityResult, MultiplicityError> {
    match locus {
        Locus::Point(p) => mult_at_point(f, p),
        Locus::Curve(c) => mult_along_curve(f, c),
    }
}

pub fn random_integers(seed: u64, count: usize) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen_range(RANDOM_RANGE)).collect()
}

/// Multiplicities of `f` at the points of `curve` with the given parameter values.
pub fn specialized_multiplicities<C: Scalar>(
    f: &Poly<C>,
    curve: &CurveParametrization<C>,
    values: &[C],
) -> Result<Vec<u32>, MultiplicityError> {
    values
        .iter()
        .map(|v| {
            let p = ProjectivePoint::new(curve.point_at(v)?)?;
            Ok(mult_at_point(f, &p)?.value)
        })
        .collect()
}

/// Compares the generic multiplicity along `curve` with the minimum over
/// `trials` random specializations of the curve parameter.
pub fn random_specialization_check<C: Scalar>(
    f: &Poly<C>,
    curve: &CurveParametrization<C>,
    trials: usize,
    seed: u64,
) -> CheckResult {
    let values: Vec<C> = random_integers(seed, trials.max(1))
        .into_iter()
        .map(C::from_int)
        .collect();
    specialization_check_at(f, curve, &values)
}

pub fn specialization_check_at<C: Scalar>(
    f: &Poly<C>,
    curve: &CurveParametrization<C>,
    values: &[C],
) -> CheckResult {
    let id = format!("mult.specialization.{}", curve.name);
    let generic = match mult_along_curve(f, curve) {
        Ok(m) => m.value,
        Err(e) => return CheckResult::fail(id, e.to_string()),
    };
    let specialized = match specialized_multiplicities(f, curve, values) {
        Ok(v) => v,
        Err(e) => return CheckResult::fail(id, e.to_string()),
    };
    let min = specialized.iter().copied().min().unwrap_or(u32::MAX);
    let status = if min == generic {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    CheckResult::new(
        id,
        status,
        format!("generic {generic}, specialized minimum {min}"),
    )
    .with_value("generic", generic)
    .with_value("specialized", json!(specialized))
    .with_value("lambda", json!(values.iter().map(|v| v.to_string()).collect::<Vec<_>>()))
}

/// Multiplicity of a random member `sum c_i f_i` of the linear system,
/// minimized over two independent draws.
pub fn generic_member_mult<C: Scalar>(
    map: &CremonaMap<C>,
    locus: &Locus<C>,
    seed: u64,
) -> Result<MultiplicityResult, MultiplicityError> {
    let mut best = u32::MAX;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2 {
        let member = loop {
            let coeffs: Vec<C> = (0..4).map(|_| C::from_int(rng.gen_range(RANDOM_RANGE))).collect();
            let sum = map
                .forms()
                .iter()
                .zip(&coeffs)
                .fold(Poly::zero(map.ring()), |acc, (f, c)| &acc + &f.scale(c));
            if !sum.is_zero() {
                break sum;
            }
        };
        best = best.min(mult_on_locus(&member, locus)?.value);
    }
    Ok(MultiplicityResult {
        value: best,
        method: match locus {
            Locus::Point(_) => MultiplicityMethod::AffineShift,
            Locus::Curve(_) => MultiplicityMethod::GenericPoint,
        },
        locus: locus.label(),
    })
}

/// Loci of the multiplicity table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableLocus {
    L,
    C,
    Q,
    T,
}

impl TableLocus {
    pub const ALL: [TableLocus; 4] = [TableLocus::L, TableLocus::C, TableLocus::Q, TableLocus::T];

    pub fn name(&self) -> &'static str {
        match self {
            TableLocus::L => "L",
            TableLocus::C => "C",
            TableLocus::Q => "Q",
            TableLocus::T => "T",
        }
    }
}

/// One multiplicity computed by two independent methods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossChecked {
    pub value: u32,
    pub primary: MultiplicityMethod,
    pub oracle: MultiplicityMethod,
    pub oracle_value: u32,
}

impl CrossChecked {
    pub fn agrees(&self) -> bool {
        self.value == self.oracle_value
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub locus: TableLocus,
    pub forms: Vec<CrossChecked>,
    pub discriminant: CrossChecked,
}

impl TableRow {
    pub fn form_values(&self) -> [u32; 4] {
        std::array::from_fn(|i| self.forms[i].value)
    }

    pub fn min_form(&self) -> u32 {
        self.forms.iter().map(|c| c.value).min().unwrap_or(0)
    }

    pub fn agrees(&self) -> bool {
        self.forms.iter().all(CrossChecked::agrees) && self.discriminant.agrees()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityTable {
    pub rows: Vec<TableRow>,
}

impl MultiplicityTable {
    pub fn row(&self, locus: TableLocus) -> &TableRow {
        self.rows
            .iter()
            .find(|r| r.locus == locus)
            .expect("table covers every locus")
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(TableRow::agrees)
    }
}

/// The point `Q = (0:0:0:1)`.
pub fn point_q() -> ProjectivePoint<Rational> {
    ProjectivePoint::new([0, 0, 0, 1].map(crate::rat)).expect("nonzero point")
}

fn cross_check(
    f: &Poly<Rational>,
    locus: TableLocus,
    seed: u64,
) -> Result<CrossChecked, MultiplicityError> {
    let ring = f.ring();
    let trials = 5;
    let specialize = |curve: &CurveParametrization<Rational>| -> Result<u32, MultiplicityError> {
        let values: Vec<Rational> = random_integers(seed, trials).into_iter().map(crate::rat).collect();
        Ok(specialized_multiplicities(f, curve, &values)?
            .into_iter()
            .min()
            .unwrap_or(u32::MAX))
    };
    let (value, primary, oracle_value, oracle) = match locus {
        TableLocus::L => (
            mult_along_curve(f, &CurveParametrization::line_l(ring))?.value,
            MultiplicityMethod::GenericPoint,
            ideal_order(f, &[0, 1])?,
            MultiplicityMethod::IdealOrder,
        ),
        TableLocus::C => {
            let curve = CurveParametrization::conic_c(ring);
            (
                mult_along_curve(f, &curve)?.value,
                MultiplicityMethod::GenericPoint,
                specialize(&curve)?,
                MultiplicityMethod::RandomSpecialization,
            )
        }
        TableLocus::T => {
            let curve = CurveParametrization::twisted_cubic(ring);
            (
                mult_along_curve(f, &curve)?.value,
                MultiplicityMethod::GenericPoint,
                specialize(&curve)?,
                MultiplicityMethod::RandomSpecialization,
            )
        }
        // Q is the origin of the chart x3 = 1, so no shift is needed there.
        TableLocus::Q => (
            mult_at_point(f, &point_q())?.value,
            MultiplicityMethod::AffineShift,
            ideal_order(f, &[0, 1, 2])?,
            MultiplicityMethod::IdealOrder,
        ),
    };
    Ok(CrossChecked {
        value,
        primary,
        oracle,
        oracle_value,
    })
}

/// Multiplicities of the four forms and of `d` on `L`, `C`, `Q` and `T`,
/// each computed by two independent methods.
pub fn multiplicity_table(
    map: &CremonaMap<Rational>,
    d: &Poly<Rational>,
    seed: u64,
) -> Result<MultiplicityTable, MultiplicityError> {
    let rows = TableLocus::ALL
        .par_iter()
        .map(|&locus| {
            let forms = map
                .forms()
                .par_iter()
                .map(|f| cross_check(f, locus, seed))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(TableRow {
                locus,
                forms,
                discriminant: cross_check(d, locus, seed)?,
            })
        })
        .collect::<Result<Vec<_>, MultiplicityError>>()?;
    Ok(MultiplicityTable { rows })
}

/// Thresholds of the Noether-Fano criterion for degree `d`: `(d/2, d/4)`.
pub fn fano_thresholds(degree: u32) -> (Rational, Rational) {
    let d = crate::rat(degree as i64);
    (&d / crate::rat(2), &d / crate::rat(4))
}

/// Summary of the threshold comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoVerdict {
    pub degree: u32,
    pub point_threshold: String,
    pub curve_threshold: String,
    pub point_min: u32,
    pub curve_min: u32,
    pub point_exceeds: bool,
    pub curve_exceeds: bool,
}

pub fn fano_summary(degree: u32, table: &MultiplicityTable) -> FanoVerdict {
    let (half, quarter) = fano_thresholds(degree);
    let point_min = table.row(TableLocus::Q).min_form();
    let curve_min = table
        .row(TableLocus::L)
        .min_form()
        .min(table.row(TableLocus::C).min_form());
    let exceeds_curve = [TableLocus::L, TableLocus::C]
        .iter()
        .any(|&l| crate::rat(table.row(l).min_form() as i64) > quarter);
    FanoVerdict {
        degree,
        point_threshold: half.to_string(),
        curve_threshold: quarter.to_string(),
        point_min,
        curve_min,
        point_exceeds: crate::rat(point_min as i64) > half,
        curve_exceeds: exceeds_curve,
    }
}

/// Minimum multiplicities at `Q` and along `L` and `C`, compared against
/// `d/2` and `d/4`. Passes when no locus exceeds either threshold and the
/// bounds `min <= 6` (points) and `min <= 3` (curves) are reproduced.
pub fn fano_verdict(map: &CremonaMap<Rational>, d: &Poly<Rational>, seed: u64) -> CheckResult {
    const ID: &str = "fano.verdict";
    let table = match multiplicity_table(map, d, seed) {
        Ok(t) => t,
        Err(e) => return CheckResult::fail(ID, e.to_string()),
    };
    fano_verdict_from_table(map.degree(), &table)
}

pub fn fano_verdict_from_table(degree: u32, table: &MultiplicityTable) -> CheckResult {
    const ID: &str = "fano.verdict";
    let v = fano_summary(degree, table);
    let ok = !v.point_exceeds && !v.curve_exceeds && v.point_min <= 6 && v.curve_min <= 3;
    let detail = format!(
        "min mult at Q = {} vs d/2 = {}; min mult along L, C = {} vs d/4 = {}; {}",
        v.point_min,
        v.point_threshold,
        v.curve_min,
        v.curve_threshold,
        if ok {
            "no locus exceeds the thresholds"
        } else {
            "threshold exceeded or bound not reproduced"
        }
    );
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    CheckResult::new(ID, status, detail)
        .with_value("verdict", serde_json::to_value(&v).expect("serializable"))
        .with_paper_value("min_P <= 6, min_C <= 3")
}

impl<C: Scalar> From<CurveParametrization<C>> for Locus<C> {
    fn from(c: CurveParametrization<C>) -> Self {
        Locus::Curve(c)
    }
}

impl<C: Scalar> From<ProjectivePoint<C>> for Locus<C> {
    fn from(p: ProjectivePoint<C>) -> Self {
        Locus::Point(p)
    }
}

impl From<CurveName> for TableLocus {
    fn from(c: CurveName) -> Self {
        match c {
            CurveName::L => TableLocus::L,
            CurveName::C => TableLocus::C,
            CurveName::T => TableLocus::T,
        }
    }
}
