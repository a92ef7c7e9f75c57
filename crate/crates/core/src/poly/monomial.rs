use std::cmp::Ordering;

use smallvec::SmallVec;

use super::PolyError;

/// Exponent vector, one entry per ring variable.
///
/// Ordered graded-lexicographically: higher total degree first, ties broken
/// by the exponent of the earliest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn variable(nvars: usize, index: usize, exponent: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = exponent;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree counted over the first `count` variables only.
    pub fn partial_degree(&self, count: usize) -> u32 {
        self.0[..count].iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).ok_or(PolyError::ExponentOverflow)?;
        }
        Ok(Monomial(out))
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
