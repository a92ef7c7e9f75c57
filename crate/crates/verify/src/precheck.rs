//! Randomized identity testing by exact evaluation at seeded integer points.

use cremona_core::binary_cubic::build_discriminant;
use cremona_core::multiplicity::random_integers;
use cremona_core::{rat, CheckResult, PolyError, QCremonaMap, QPoly, Rational, RingRef};
use num_traits::Pow;
use serde_json::{json, Map, Value};

pub const DEFAULT_TRIALS: usize = 20;

/// `trials` points with a seeded random integer in `[-1000, 1000]` for every
/// variable of `ring`, parameters included.
pub fn random_points(ring: &RingRef, trials: usize, seed: u64) -> Vec<Vec<Rational>> {
    let n = ring.len();
    random_integers(seed, trials * n)
        .chunks(n)
        .map(|c| c.iter().map(|&v| rat(v)).collect())
        .collect()
}

fn point_json(ring: &RingRef, point: &[Rational]) -> Value {
    let mut m = Map::new();
    for (name, v) in ring.names().iter().zip(point) {
        m.insert(name.clone(), json!(v.to_string()));
    }
    Value::Object(m)
}

/// Compares `sides(point) = (lhs, rhs)` componentwise at random points. A
/// failure carries the first counterexample point.
pub fn evaluation_check(
    id: &str,
    ring: &RingRef,
    trials: usize,
    seed: u64,
    sides: impl Fn(&[Rational]) -> Result<(Vec<Rational>, Vec<Rational>), PolyError>,
) -> CheckResult {
    let trials = trials.max(1);
    for (k, point) in random_points(ring, trials, seed).iter().enumerate() {
        let (lhs, rhs) = match sides(point) {
            Ok(v) => v,
            Err(e) => return CheckResult::fail(id, e.to_string()),
        };
        if let Some(i) = (0..lhs.len().max(rhs.len())).find(|&i| lhs.get(i) != rhs.get(i)) {
            let names: Vec<String> = ring
                .names()
                .iter()
                .zip(point)
                .map(|(n, v)| format!("{n}={v}"))
                .collect();
            return CheckResult::fail(
                id,
                format!("counterexample at ({}): component {i} differs", names.join(", ")),
            )
            .with_value("counterexample", point_json(ring, point))
            .with_value("component", i)
            .with_value("trial", k)
            .with_value("seed", seed);
        }
    }
    CheckResult::pass(id, format!("both sides agree at {trials} random points"))
        .with_value("trials", trials)
        .with_value("seed", seed)
}

/// Evaluates `lhs` and `rhs` at `trials` seeded random points.
pub fn probabilistic_identity_check(lhs: &QPoly, rhs: &QPoly, trials: usize, seed: u64) -> CheckResult {
    const ID: &str = "identity.precheck";
    if lhs.ring() != rhs.ring() {
        return CheckResult::fail(ID, "operands live in different rings");
    }
    evaluation_check(ID, lhs.ring(), trials, seed, |pt| {
        Ok((vec![lhs.evaluate(pt)?], vec![rhs.evaluate(pt)?]))
    })
}

/// The point with its geometric coordinates replaced by `map(point)`.
fn apply(map: &QCremonaMap, point: &[Rational]) -> Result<Vec<Rational>, PolyError> {
    let mut image = point.to_vec();
    for (i, f) in map.forms().iter().enumerate() {
        image[i] = f.evaluate(point)?;
    }
    Ok(image)
}

fn geometric(point: &[Rational]) -> Vec<Rational> {
    point[..4].to_vec()
}

/// `D(map(x)) == D(x)^deg` at random points.
pub fn covariance_precheck(map: &QCremonaMap, trials: usize, seed: u64) -> CheckResult {
    let d: QPoly = build_discriminant(map.ring());
    evaluation_check("cremona.covariance.precheck", map.ring(), trials, seed, |pt| {
        let lhs = d.evaluate(&apply(map, pt)?)?;
        let rhs = Pow::pow(d.evaluate(pt)?, map.degree());
        Ok((vec![lhs], vec![rhs]))
    })
}

/// `outer(inner(x)) == x_i D(x)^e` at random points, `e` fixed by degrees.
pub fn inverse_precheck(outer: &QCremonaMap, inner: &QCremonaMap, trials: usize, seed: u64) -> CheckResult {
    let d: QPoly = build_discriminant(inner.ring());
    let exponent = (outer.degree() * inner.degree()).saturating_sub(1) / 4;
    evaluation_check("cremona.inverse.precheck", inner.ring(), trials, seed, |pt| {
        let lhs = geometric(&apply(outer, &apply(inner, pt)?)?);
        let cofactor = Pow::pow(d.evaluate(pt)?, exponent);
        let rhs = pt[..4].iter().map(|x| x * &cofactor).collect();
        Ok((lhs, rhs))
    })
}

/// `outer(inner(x)) == D(x)^e sum(x)` at random points, `e` fixed by degrees.
pub fn group_law_precheck(
    outer: &QCremonaMap,
    inner: &QCremonaMap,
    sum: &QCremonaMap,
    trials: usize,
    seed: u64,
) -> CheckResult {
    let d: QPoly = build_discriminant(inner.ring());
    let exponent = (outer.degree() * inner.degree()).saturating_sub(sum.degree()) / 4;
    evaluation_check("cremona.group_law.precheck", inner.ring(), trials, seed, |pt| {
        let lhs = geometric(&apply(outer, &apply(inner, pt)?)?);
        let cofactor = Pow::pow(d.evaluate(pt)?, exponent);
        let rhs = geometric(&apply(sum, pt)?).iter().map(|v| v * &cofactor).collect();
        Ok((lhs, rhs))
    })
}
