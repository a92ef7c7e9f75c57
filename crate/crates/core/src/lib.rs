//! Exact verification kernel for the degree-13 Cremona family of P^3.
//!
//! The coordinates `x0..x3` are read as the normalized coefficients of a
//! binary cubic; its discriminant `D` drives a one-parameter group of
//! Cremona transformations whose identities, base locus and multiplicities
//! are checked here by exact polynomial arithmetic.

pub mod binary_cubic;
pub mod check;
pub mod cremona;
pub mod multiplicity;
pub mod poly;
pub mod scalar;
pub mod univariate;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use check::{CheckResult, CheckStatus};
pub use poly::{Monomial, Poly, PolyError, RingDescriptor, RingRef};
pub use scalar::Scalar;

/// Exact rationals, the coefficient field of every verification.
pub type Rational = BigRational;
/// Polynomials over the rationals.
pub type QPoly = Poly<Rational>;
pub type QCremonaMap = cremona::CremonaMap<Rational>;
pub type QFamilyMember = cremona::FamilyMember<Rational>;
pub type QProjectivePoint = multiplicity::ProjectivePoint<Rational>;
pub type QCurve = binary_cubic::CurveParametrization<Rational>;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
