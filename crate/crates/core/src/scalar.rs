//! Coefficient scalars.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Field elements usable as polynomial coefficients.
///
/// Exact division and identity checks assume exact arithmetic, so the
/// intended instances are the rationals (`BigRational`, `Rational64`).
/// Floating-point types satisfy the bounds but give no guarantees.
pub trait Scalar:
    Signed + FromPrimitive + Clone + PartialOrd + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits the scalar type")
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.clone() + a.clone() * b.clone();
    }

    /// `self += a`.
    fn add_ref(&mut self, a: &Self) {
        *self = self.clone() + a.clone();
    }
}

// Integer coefficients dominate every workload; keep them off the gcd path.
impl Scalar for BigRational {
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_integer() && b.is_integer() && self.is_integer() {
            let (mut n, d) = std::mem::replace(self, Ratio::zero()).into_raw();
            n += a.numer() * b.numer();
            *self = Ratio::new_raw(n, d);
        } else {
            *self = &*self + a * b;
        }
    }

    fn add_ref(&mut self, a: &Self) {
        if a.is_integer() && self.is_integer() {
            let (mut n, d) = std::mem::replace(self, Ratio::zero()).into_raw();
            n += a.numer();
            debug_assert!(d.is_one());
            *self = Ratio::new_raw(n, d);
        } else {
            *self += a;
        }
    }
}

impl Scalar for Ratio<i64> {}
impl Scalar for Ratio<i32> {}
impl Scalar for f64 {}
impl Scalar for f32 {}
