//! Exact sparse multivariate polynomials.
//!
//! A [`Poly`] is a list of `(Monomial, coefficient)` pairs kept in canonical
//! form: no zero coefficients, strictly decreasing graded-lex order. Every
//! operation returns a fresh canonical value.

mod monomial;
mod parse;
mod ring;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use rustc_hash::FxHashMap as HashMap;
use thiserror::Error;

use crate::scalar::Scalar;

pub use monomial::Monomial;
pub use ring::{RingDescriptor, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("chart coordinate {0} is zero or not a constant")]
    BadChart(usize),
    #[error("polynomial is not homogeneous in the geometric variables")]
    NotHomogeneous,
}

/// Products with more term pairs than this are split across threads.
const PARALLEL_MUL_THRESHOLD: usize = 1 << 16;

#[derive(Clone, Debug)]
pub struct Poly<C> {
    ring: RingRef,
    terms: Vec<(Monomial, C)>,
    degree: u32,
}

impl<C: PartialEq> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

fn check_rings(a: &RingRef, b: &RingRef) -> Result<(), PolyError> {
    if std::sync::Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(PolyError::RingMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

fn accumulate<C: Scalar>(acc: &mut HashMap<Monomial, C>, mono: Monomial, coeff: C) {
    match acc.entry(mono) {
        std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_ref(&coeff),
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
    }
}

fn accumulate_product<C: Scalar>(acc: &mut HashMap<Monomial, C>, mono: Monomial, a: &C, b: &C) {
    match acc.entry(mono) {
        std::collections::hash_map::Entry::Occupied(mut e) => e.get_mut().add_product(a, b),
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(a.clone() * b.clone());
        }
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
            degree: 0,
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &RingRef, c: C) -> Self {
        Self::term(ring, Monomial::one(ring.len()), c)
    }

    pub fn term(ring: &RingRef, mono: Monomial, c: C) -> Self {
        assert_eq!(mono.len(), ring.len(), "monomial length must match the ring");
        if c.is_zero() {
            return Self::zero(ring);
        }
        let degree = mono.degree();
        Poly {
            ring: ring.clone(),
            terms: vec![(mono, c)],
            degree,
        }
    }

    pub fn var(ring: &RingRef, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &RingRef, index: usize) -> Self {
        Self::term(ring, Monomial::variable(ring.len(), index, 1), C::one())
    }

    /// Canonicalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc = HashMap::default();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.len(), "monomial length must match the ring");
            accumulate(&mut acc, m, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef, acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self::from_sorted(ring, terms)
    }

    fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, C)>) -> Self {
        let degree = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        Poly {
            ring: ring.clone(),
            terms,
            degree,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Monomial, &C)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_constant())
    }

    /// Value of a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_constant() => Some(c.clone()),
            _ => None,
        }
    }

    /// Total degree over all variables; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&C> {
        self.terms
            .binary_search_by(|(m, _)| mono.cmp(m))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Largest degree in the geometric variables.
    pub fn geometric_degree(&self) -> u32 {
        let g = self.ring.geometric_count();
        self.terms.iter().map(|(m, _)| m.partial_degree(g)).max().unwrap_or(0)
    }

    /// Smallest degree in the geometric variables, `None` for zero.
    pub fn min_geometric_degree(&self) -> Option<u32> {
        let g = self.ring.geometric_count();
        self.terms.iter().map(|(m, _)| m.partial_degree(g)).min()
    }

    /// Homogeneous in the geometric variables; the zero polynomial counts.
    pub fn is_homogeneous(&self) -> bool {
        let g = self.ring.geometric_count();
        let mut degrees = self.terms.iter().map(|(m, _)| m.partial_degree(g));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Whether the variable occurs in any term.
    pub fn contains_var(&self, index: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[index] > 0)
    }

    /// Minimum over terms of the summed exponents of `vars`.
    pub fn order_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&i| m.exponents()[i]).sum())
            .min()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        check_rings(&self.ring, &other.ring)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => {
                        out.push((ma.clone(), ca.clone()));
                        a.next();
                    }
                    std::cmp::Ordering::Less => {
                        out.push((mb.clone(), cb.clone()));
                        b.next();
                    }
                    std::cmp::Ordering::Equal => {
                        let s = ca.clone() + cb.clone();
                        if !s.is_zero() {
                            out.push((ma.clone(), s));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => out.extend(a.by_ref().cloned()),
                (None, Some(_)) => out.extend(b.by_ref().cloned()),
                (None, None) => break,
            }
        }
        Ok(Self::from_sorted(&self.ring, out))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
            degree: self.degree,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
            degree: self.degree,
        }
    }

    /// Multiplies by `c * mono`; order is preserved since grlex is a monomial order.
    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Result<Self, PolyError> {
        if c.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| Ok((m.checked_mul(mono)?, a.clone() * c.clone())))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Self::from_sorted(&self.ring, terms))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        check_rings(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let product_chunk = |chunk: &[(Monomial, C)]| -> Result<HashMap<Monomial, C>, PolyError> {
            let mut acc = HashMap::default();
            acc.reserve((chunk.len() * small.len()).min(1 << 18));
            for (ma, ca) in chunk {
                for (mb, cb) in &small.terms {
                    accumulate_product(&mut acc, ma.checked_mul(mb)?, ca, cb);
                }
            }
            Ok(acc)
        };
        let acc = if big.len() * small.len() > PARALLEL_MUL_THRESHOLD {
            let chunk = big.len().div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
            let partials = big
                .terms
                .par_chunks(chunk)
                .map(product_chunk)
                .collect::<Result<Vec<_>, PolyError>>()?;
            let mut iter = partials.into_iter();
            let mut acc = iter.next().unwrap_or_default();
            for part in iter {
                for (m, c) in part {
                    accumulate(&mut acc, m, c);
                }
            }
            acc
        } else {
            product_chunk(&big.terms)?
        };
        Ok(Self::from_map(&self.ring, acc))
    }

    /// `self^n` by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The unique `r` with `divisor * r == self`, or [`PolyError::NotDivisible`].
    ///
    /// Runs multivariate division by leading terms; the quotient is
    /// re-multiplied against the divisor before it is returned.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, PolyError> {
        check_rings(&self.ring, &divisor.ring)?;
        let Some((lead_m, lead_c)) = divisor.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        if self.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if divisor.len() == 1 {
            let inv = C::one() / lead_c.clone();
            let terms = self
                .terms
                .iter()
                .map(|(m, c)| {
                    m.checked_div(lead_m)
                        .map(|q| (q, c.clone() * inv.clone()))
                        .ok_or(PolyError::NotDivisible)
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Self::from_sorted(&self.ring, terms));
        }
        let tail = &divisor.terms[1..];
        let mut remainder: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = remainder.pop_last() {
            let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
            let qc = c / lead_c.clone();
            let neg_qc = -qc.clone();
            for (tm, tc) in tail {
                let mono = tm.checked_mul(&qm)?;
                match remainder.entry(mono) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        e.get_mut().add_product(tc, &neg_qc);
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(tc.clone() * neg_qc.clone());
                    }
                }
            }
            quotient.push((qm, qc));
        }
        let quotient = Self::from_sorted(&self.ring, quotient);
        if &quotient * divisor != *self {
            return Err(PolyError::NotDivisible);
        }
        Ok(quotient)
    }

    /// Partial derivative with respect to the variable at `index`.
    pub fn derivative(&self, index: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[index];
            (e > 0).then(|| {
                let mut exps = m.exponents().to_vec();
                exps[index] -= 1;
                (Monomial::from_exponents(&exps), c.clone() * C::from_int(e as i64))
            })
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// All images must share one ring, which becomes the ring of the result
    /// (or `self`'s ring when `assignment` is empty). Variables of `self`
    /// without an image map to the variable of the same name in the target.
    pub fn substitute(&self, assignment: &[(&str, &Poly<C>)]) -> Result<Self, PolyError> {
        let target = match assignment.first() {
            Some((_, p)) => p.ring.clone(),
            None => self.ring.clone(),
        };
        let mut images: Vec<Option<Poly<C>>> = vec![None; self.ring.len()];
        for (name, image) in assignment {
            check_rings(&target, &image.ring)?;
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            images[i] = Some((*image).clone());
        }
        let mut powers: Vec<PowerCache<C>> = Vec::with_capacity(self.ring.len());
        for (i, image) in images.into_iter().enumerate() {
            let image = match image {
                Some(p) => p,
                None if self.contains_var(i) => Poly::var(&target, self.ring.name(i))?,
                None => Poly::one(&target),
            };
            powers.push(PowerCache::new(image));
        }
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    powers[i].ensure(e);
                }
            }
        }
        let mut acc: HashMap<Monomial, C> = HashMap::default();
        for (m, c) in &self.terms {
            let mut factors: Vec<&Poly<C>> = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    factors.push(powers[i].get(e));
                }
            }
            factors.sort_by_key(|p| p.len());
            let mut product = Poly::constant(&target, c.clone());
            for f in factors {
                product = product.try_mul(f)?;
            }
            for (pm, pc) in product.terms {
                accumulate(&mut acc, pm, pc);
            }
        }
        Ok(Self::from_map(&target, acc))
    }

    /// Evaluates at `values`, one per ring variable.
    pub fn evaluate(&self, values: &[C]) -> Result<C, PolyError> {
        if values.len() < self.ring.len() {
            return Err(PolyError::MissingAssignment(
                self.ring.name(values.len()).to_string(),
            ));
        }
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in values.iter().zip(m.exponents()) {
                if e > 0 {
                    v = v * num_traits::pow(x.clone(), e as usize);
                }
            }
            total = total + v;
        }
        Ok(total)
    }

    /// Evaluates with values given by name; unused variables need no value.
    pub fn evaluate_named(&self, values: &[(&str, C)]) -> Result<C, PolyError> {
        let mut full = vec![C::zero(); self.ring.len()];
        for (name, v) in values {
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            full[i] = v.clone();
        }
        for i in 0..self.ring.len() {
            if self.contains_var(i) && !values.iter().any(|(n, _)| *n == self.ring.name(i)) {
                return Err(PolyError::MissingAssignment(self.ring.name(i).to_string()));
            }
        }
        self.evaluate(&full)
    }

    /// Reinterprets the terms in a ring with the same number of variables.
    pub fn with_ring(&self, ring: &RingRef) -> Self {
        assert_eq!(ring.len(), self.ring.len(), "relabelling needs equal variable counts");
        Poly {
            ring: ring.clone(),
            terms: self.terms.clone(),
            degree: self.degree,
        }
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &RingRef) -> Result<Self, PolyError> {
        let mut map = vec![0usize; self.ring.len()];
        for (i, slot) in map.iter_mut().enumerate() {
            match target.index_of(self.ring.name(i)) {
                Some(j) => *slot = j,
                None if self.contains_var(i) => {
                    return Err(PolyError::UnknownVariable(self.ring.name(i).to_string()))
                }
                None => {}
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[map[i]] = e;
                }
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    /// Local expansion of a form around a point in an affine chart.
    ///
    /// `point` gives four coordinates (polynomials in the parameters, all in
    /// `self`'s ring). The chart variable is fixed to its point value, which
    /// must be a nonzero constant; every other geometric variable `xi` becomes
    /// `point_i + yi`. The result lives in [`RingDescriptor::local`], so its
    /// geometric variables are the local coordinates `y0..`, and its
    /// coefficients are polynomials in the parameters.
    pub fn affine_slice_shift(&self, point: &[Poly<C>], chart: usize) -> Result<Self, PolyError> {
        let g = self.ring.geometric_count();
        if point.len() != g || chart >= g {
            return Err(PolyError::BadChart(chart));
        }
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        for p in point {
            check_rings(&self.ring, &p.ring)?;
        }
        match point[chart].as_constant() {
            Some(c) if !c.is_zero() => {}
            _ => return Err(PolyError::BadChart(chart)),
        }
        let local = self.ring.local()?;
        let images: Vec<Poly<C>> = (0..g)
            .map(|i| {
                let base = point[i].with_ring(&local);
                if i == chart {
                    base
                } else {
                    &base + &Poly::var_at(&local, i)
                }
            })
            .collect();
        let assignment: Vec<(&str, &Poly<C>)> =
            (0..g).map(|i| (local.name(i), &images[i])).collect();
        self.with_ring(&local).substitute(&assignment)
    }

    pub fn parse(text: &str, ring: &RingRef) -> Result<Self, PolyError> {
        parse::parse_poly(text, ring)
    }
}

struct PowerCache<C> {
    powers: HashMap<u32, Poly<C>>,
}

impl<C: Scalar> PowerCache<C> {
    fn new(base: Poly<C>) -> Self {
        let mut powers = HashMap::default();
        powers.insert(1, base);
        PowerCache { powers }
    }

    /// Requires a prior `ensure(e)`.
    fn get(&self, e: u32) -> &Poly<C> {
        &self.powers[&e]
    }

    fn ensure(&mut self, e: u32) {
        if self.powers.contains_key(&e) {
            return;
        }
        let p = if e.is_multiple_of(2) {
            self.ensure(e / 2);
            let h = &self.powers[&(e / 2)];
            h * h
        } else {
            self.ensure(e - 1);
            &self.powers[&(e - 1)] * &self.powers[&1]
        };
        self.powers.insert(e, p);
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => self.ring.name(i).to_string(),
                    _ => format!("{}^{}", self.ring.name(i), e),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<C: Scalar> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$try(rhs).expect(concat!("Poly::", stringify!($method)))
            }
        }
        impl<C: Scalar> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Scalar> $tr<Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                self.$method(&rhs)
            }
        }
    };
}

// Operator forms panic on ring mismatch or exponent overflow; use the
// `try_*` methods where either can happen.
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests;
