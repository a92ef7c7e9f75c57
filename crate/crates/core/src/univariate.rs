//! Irreducibility of univariate quartics over the rationals.
//!
//! The quartic is scaled to a monic integer polynomial; by Gauss's lemma
//! it is reducible over Q iff it has an integer root or splits into two
//! monic integer quadratics. Both are decided by enumerating the divisors
//! of the constant term.

use num_bigint::BigInt;
use num_integer::Integer;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuarticVerdict {
    Irreducible,
    RationalRoot(Rational),
    QuadraticFactors {
        /// Monic integer quadratics `v^2 + a v + b` of the scaled quartic.
        first: (BigInt, BigInt),
        second: (BigInt, BigInt),
    },
}

impl QuarticVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, QuarticVerdict::Irreducible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuarticError {
    #[error("expected degree 4, found degree {0}")]
    WrongDegree(usize),
    #[error("constant term {0} too large for divisor enumeration")]
    TooLarge(BigInt),
}

/// Bound on the constant term of the scaled quartic.
const MAX_CONSTANT: u64 = 1 << 40;

/// Coefficients lowest degree first.
pub fn degree(coeffs: &[Rational]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Integer coefficients with the same roots: denominators cleared, content removed.
pub fn primitive_integer(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, QuarticError> {
    let m = n
        .abs()
        .to_u64()
        .filter(|&m| m <= MAX_CONSTANT)
        .ok_or_else(|| QuarticError::TooLarge(n.clone()))?;
    let mut out = Vec::new();
    let mut k = 1u64;
    while k * k <= m {
        if m % k == 0 {
            out.push(k);
            if k != m / k {
                out.push(m / k);
            }
        }
        k += 1;
    }
    out.sort_unstable();
    Ok(out
        .into_iter()
        .flat_map(|d| [BigInt::from(d), -BigInt::from(d)])
        .collect())
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Decides irreducibility over Q of a degree-4 polynomial, coefficients
/// lowest degree first.
pub fn quartic_irreducibility(coeffs: &[Rational]) -> Result<QuarticVerdict, QuarticError> {
    match degree(coeffs) {
        Some(4) => {}
        Some(d) => return Err(QuarticError::WrongDegree(d)),
        None => return Err(QuarticError::WrongDegree(0)),
    }
    let a = primitive_integer(&coeffs[..5]);
    let lead = a[4].clone();
    // v = lead * u turns lead^3 * p(u) into a monic integer quartic in v.
    let monic: Vec<BigInt> = (0..5)
        .map(|k| match k {
            4 => BigInt::one(),
            _ => &a[k] * lead.pow(3 - k as u32),
        })
        .collect();
    let to_u = |v: &BigInt| Rational::new(v.clone(), lead.clone());

    if monic[0].is_zero() {
        return Ok(QuarticVerdict::RationalRoot(Rational::zero()));
    }
    let divs = divisors(&monic[0])?;
    for r in &divs {
        if eval_int(&monic, r).is_zero() {
            return Ok(QuarticVerdict::RationalRoot(to_u(r)));
        }
    }
    // (v^2 + p v + b)(v^2 + q v + e): p + q = c3, pq + b + e = c2,
    // pe + qb = c1, be = c0.
    let (c0, c1, c2, c3) = (&monic[0], &monic[1], &monic[2], &monic[3]);
    for b in &divs {
        let e = c0 / b;
        if b > &e {
            continue;
        }
        let candidates: Vec<(BigInt, BigInt)> = if b != &e {
            let num = c1 - b * c3;
            let den = &e - b;
            if !num.is_multiple_of(&den) {
                continue;
            }
            let p = num / den;
            let q = c3 - &p;
            vec![(p, q)]
        } else {
            if c1 != &(b * c3) {
                continue;
            }
            let disc = c3 * c3 - BigInt::from(4) * (c2 - b - &e);
            if disc.is_negative() {
                continue;
            }
            let s = disc.sqrt();
            if &s * &s != disc || (c3 + &s).is_odd() {
                continue;
            }
            let p = (c3 + &s) / 2;
            let q = c3 - &p;
            vec![(p, q)]
        };
        for (p, q) in candidates {
            if &(&p * &q) + b + &e == *c2 && &p * &e + &q * b == *c1 {
                return Ok(QuarticVerdict::QuadraticFactors {
                    first: (p, b.clone()),
                    second: (q, e),
                });
            }
        }
    }
    Ok(QuarticVerdict::Irreducible)
}
