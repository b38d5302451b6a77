//! Second-order jets in two parameters.
//!
//! A [`Jet2`] stores the Taylor coefficients (factorials absorbed) of a function around a
//! base point `(u0, v0)`:
//!
//! ```text
//! c00 + c10·δu + c01·δv + c20·δu² + c11·δu·δv + c02·δv²
//! ```
//!
//! Products are truncated past total degree 2, so `∂uu = 2·c20`, `∂uv = c11`, `∂vv = 2·c02`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Jet2 {
    /// `[c00, c10, c01, c20, c11, c02]`
    pub c: [Scalar; 6],
}

impl Jet2 {
    pub fn new(c00: Scalar, c10: Scalar, c01: Scalar, c20: Scalar, c11: Scalar, c02: Scalar) -> Self {
        Jet2 { c: [c00, c10, c01, c20, c11, c02] }
    }

    pub fn constant(s: Scalar) -> Self {
        let z = Scalar::zero;
        Jet2::new(s, z(), z(), z(), z(), z())
    }

    pub fn zero() -> Self {
        Jet2::constant(Scalar::zero())
    }

    pub fn one() -> Self {
        Jet2::constant(Scalar::one())
    }

    /// The coordinate function `u` expanded at `u0`.
    pub fn var_u(u0: Scalar) -> Self {
        let z = Scalar::zero;
        Jet2::new(u0, Scalar::one(), z(), z(), z(), z())
    }

    /// The coordinate function `v` expanded at `v0`.
    pub fn var_v(v0: Scalar) -> Self {
        let z = Scalar::zero;
        Jet2::new(v0, z(), Scalar::one(), z(), z(), z())
    }

    pub fn value(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn du(&self) -> &Scalar {
        &self.c[1]
    }

    pub fn dv(&self) -> &Scalar {
        &self.c[2]
    }

    pub fn duu(&self) -> Scalar {
        &self.c[3] * int(2)
    }

    pub fn duv(&self) -> &Scalar {
        &self.c[4]
    }

    pub fn dvv(&self) -> Scalar {
        &self.c[5] * int(2)
    }

    /// `∂/∂u` of the jet. Only the value and first-order part of the result are meaningful;
    /// the second-order slots are zero-filled.
    pub fn partial_u(&self) -> Jet2 {
        let z = Scalar::zero;
        Jet2::new(self.c[1].clone(), self.duu(), self.c[4].clone(), z(), z(), z())
    }

    /// `∂/∂v`, same truncation caveat as [`Jet2::partial_u`].
    pub fn partial_v(&self) -> Jet2 {
        let z = Scalar::zero;
        Jet2::new(self.c[2].clone(), self.c[4].clone(), self.dvv(), z(), z(), z())
    }

    /// Drops the second-order part.
    pub fn truncate1(&self) -> Jet2 {
        let z = Scalar::zero;
        Jet2::new(self.c[0].clone(), self.c[1].clone(), self.c[2].clone(), z(), z(), z())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Units of the jet ring are exactly the jets with nonzero constant term.
    pub fn is_unit(&self) -> bool {
        !self.c[0].is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Jet2 {
        Jet2 { c: self.c.clone().map(|x| x * s) }
    }

    pub fn inverse(&self) -> Result<Jet2> {
        if !self.is_unit() {
            return Err(Error::DivisionByNonUnit);
        }
        // self = c00·(1 + e) with e nilpotent of order 3, so 1/(1+e) = 1 - e + e².
        let inv0 = Scalar::one() / &self.c[0];
        let e = {
            let mut e = self.scale(&inv0);
            e.c[0] = Scalar::zero();
            e
        };
        let e2 = &e * &e;
        Ok((&(&Jet2::one() - &e) + &e2).scale(&inv0))
    }

    pub fn checked_div(&self, rhs: &Jet2) -> Result<Jet2> {
        Ok(self * &rhs.inverse()?)
    }
}

impl fmt::Debug for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Jet2[{} | {}, {} | {}, {}, {}]",
            self.c[0], self.c[1], self.c[2], self.c[3], self.c[4], self.c[5]
        )
    }
}

impl Add for &Jet2 {
    type Output = Jet2;
    fn add(self, rhs: &Jet2) -> Jet2 {
        Jet2 { c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]) }
    }
}

impl Sub for &Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: &Jet2) -> Jet2 {
        Jet2 { c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]) }
    }
}

impl Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 { c: std::array::from_fn(|i| -&self.c[i]) }
    }
}

impl Mul for &Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: &Jet2) -> Jet2 {
        truncated_product(self, rhs)
    }
}

/// Works over a common denominator so each output coefficient is reduced only once.
fn truncated_product(lhs: &Jet2, rhs: &Jet2) -> Jet2 {
    let (a, da) = integer_form(&lhs.c);
    let (b, db) = integer_form(&rhs.c);
    let den = da * db;
    let term = |pairs: &[(usize, usize)]| -> Scalar {
        let mut acc = BigInt::zero();
        for &(i, j) in pairs {
            if !a[i].is_zero() && !b[j].is_zero() {
                acc += &a[i] * &b[j];
            }
        }
        Scalar::new(acc, den.clone())
    };
    Jet2::new(
        term(&[(0, 0)]),
        term(&[(0, 1), (1, 0)]),
        term(&[(0, 2), (2, 0)]),
        term(&[(0, 3), (1, 1), (3, 0)]),
        term(&[(0, 4), (1, 2), (2, 1), (4, 0)]),
        term(&[(0, 5), (2, 2), (5, 0)]),
    )
}

/// Integer numerators over the least common denominator of the coefficients.
fn integer_form(c: &[Scalar; 6]) -> ([BigInt; 6], BigInt) {
    let mut den = BigInt::one();
    for x in c {
        if !x.denom().is_one() {
            den = den.lcm(x.denom());
        }
    }
    let nums = std::array::from_fn(|i| {
        if c[i].denom() == &den {
            c[i].numer().clone()
        } else {
            c[i].numer() * (&den / c[i].denom())
        }
    });
    (nums, den)
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        &self + &rhs
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        &self - &rhs
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        &self * &rhs
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        -&self
    }
}

impl AddAssign<&Jet2> for Jet2 {
    fn add_assign(&mut self, rhs: &Jet2) {
        for (x, y) in self.c.iter_mut().zip(&rhs.c) {
            *x += y;
        }
    }
}

/// Jet-valued dot product.
pub fn jet_dot(a: &[Jet2], b: &[Jet2]) -> Jet2 {
    a.iter().zip(b).fold(Jet2::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `Σ coeffs[i] · vectors[i]` over the jet ring.
pub fn jet_combination(coeffs: &[Jet2], vectors: &[Vec<Jet2>]) -> Vec<Jet2> {
    let n = vectors.first().map_or(0, Vec::len);
    let mut out = vec![Jet2::zero(); n];
    for (k, v) in coeffs.iter().zip(vectors) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(k * x);
        }
    }
    out
}

pub fn values(v: &[Jet2]) -> Vec<Scalar> {
    v.iter().map(|j| j.value().clone()).collect()
}

pub fn d_u(v: &[Jet2]) -> Vec<Scalar> {
    v.iter().map(|j| j.du().clone()).collect()
}

pub fn d_v(v: &[Jet2]) -> Vec<Scalar> {
    v.iter().map(|j| j.dv().clone()).collect()
}

pub fn d_uu(v: &[Jet2]) -> Vec<Scalar> {
    v.iter().map(Jet2::duu).collect()
}

pub fn d_uv(v: &[Jet2]) -> Vec<Scalar> {
    v.iter().map(|j| j.duv().clone()).collect()
}

pub fn d_vv(v: &[Jet2]) -> Vec<Scalar> {
    v.iter().map(Jet2::dvv).collect()
}

pub fn partial_u_vec(v: &[Jet2]) -> Vec<Jet2> {
    v.iter().map(Jet2::partial_u).collect()
}

pub fn partial_v_vec(v: &[Jet2]) -> Vec<Jet2> {
    v.iter().map(Jet2::partial_v).collect()
}
