//! Exact rational scalars.
//!
//! `BigRational` keeps itself reduced with a positive denominator, which is exactly the
//! canonical form we need for hashing and byte-stable serialization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p` or `p/q`.
pub fn fmt_scalar(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `p` or `p/q` with an optional leading minus.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

/// Exact square root when `s` is the square of a rational.
pub fn rational_sqrt(s: &Scalar) -> Option<Scalar> {
    if s.is_negative() {
        return None;
    }
    let n = num_integer::Roots::sqrt(s.numer());
    let d = num_integer::Roots::sqrt(s.denom());
    if &(&n * &n) == s.numer() && &(&d * &d) == s.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Dot product of two coordinate vectors.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Rescales so that the first nonzero entry is 1. Zero vectors are returned unchanged.
pub fn normalize_first(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|x| x / &lead).collect()
        }
        None => v.to_vec(),
    }
}

/// Whether two vectors are nonzero multiples of each other (both zero counts as proportional).
pub fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    normalize_first(a) == normalize_first(b)
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}
