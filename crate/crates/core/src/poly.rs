//! Bivariate polynomials over the rationals in the parameters `u`, `v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::jet::Jet2;
use crate::scalar::{int, Scalar};

/// Sparse polynomial; the key `(i, j)` is the monomial `u^i v^j`. No zero coefficients are
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(int(n))
    }

    pub fn u() -> Self {
        Poly::monomial(Scalar::one(), 1, 0)
    }

    pub fn v() -> Self {
        Poly::monomial(Scalar::one(), 0, 1)
    }

    pub fn monomial(c: Scalar, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Poly { terms }
    }

    /// Univariate polynomial in `u` from coefficients, lowest degree first.
    pub fn in_u(coeffs: &[Scalar]) -> Self {
        coeffs.iter().enumerate().fold(Poly::zero(), |acc, (i, c)| acc + Poly::monomial(c.clone(), i as u32, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn depends_on_v(&self) -> bool {
        self.terms.keys().any(|&(_, j)| j > 0)
    }

    fn insert_add(&mut self, key: (u32, u32), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::constant(Scalar::one()), |acc, _| &acc * self)
    }

    pub fn partial_u(&self) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.insert_add((i - 1, j), c * int(i as i64));
            }
        }
        out
    }

    pub fn partial_v(&self) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.insert_add((i, j - 1), c * int(j as i64));
            }
        }
        out
    }

    pub fn eval(&self, u: &Scalar, v: &Scalar) -> Scalar {
        self.terms.iter().fold(Scalar::zero(), |acc, (&(i, j), c)| acc + c * spow(u, i) * spow(v, j))
    }

    /// Taylor jet at `(u0, v0)`, computed by evaluating the polynomial in the jet ring.
    pub fn jet_at(&self, u0: &Scalar, v0: &Scalar) -> Jet2 {
        let u = Jet2::var_u(u0.clone());
        let v = Jet2::var_v(v0.clone());
        let mut out = Jet2::zero();
        for (&(i, j), c) in &self.terms {
            out += &(&jpow(&u, i) * &jpow(&v, j)).scale(c);
        }
        out
    }

    /// Substitutes polynomials for `u` and `v`.
    pub fn compose(&self, u: &Poly, v: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), c) in &self.terms {
            out = &out + &(&u.pow(i) * &v.pow(j)).scale(c);
        }
        out
    }

    /// Monomials ordered by total degree (highest first), then by the power of `u`.
    pub fn ordered_terms(&self) -> Vec<((u32, u32), Scalar)> {
        let mut t: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        t.sort_by_key(|&((i, j), _)| std::cmp::Reverse((i + j, i)));
        t
    }
}

fn spow(x: &Scalar, e: u32) -> Scalar {
    (0..e).fold(Scalar::one(), |acc, _| acc * x)
}

fn jpow(x: &Jet2, e: u32) -> Jet2 {
    (0..e).fold(Jet2::one(), |acc, _| &acc * x)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_add(*k, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.insert_add((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&int(-1))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical expanded form. Only constructs of the chart grammar are emitted: a negative
/// leading coefficient is written as a signed integer literal (`-1*u`, `-3/2*v^2`).
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in terms.iter().enumerate() {
            let mono = monomial_text(*i, *j);
            let abs = c.abs();
            if n == 0 {
                match (&mono, c.is_negative()) {
                    (None, _) => write!(f, "{c}")?,
                    (Some(m), false) if abs.is_one() => write!(f, "{m}")?,
                    (Some(m), _) => write!(f, "{c}*{m}")?,
                }
                continue;
            }
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            match &mono {
                None => write!(f, "{abs}")?,
                Some(m) if abs.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

fn monomial_text(i: u32, j: u32) -> Option<String> {
    let part = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("u", i), part("v", j)].into_iter().flatten().collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet(c: [i64; 6]) -> Jet2 {
        Jet2 { c: c.map(int) }
    }

    #[test]
    fn jets_of_examples() {
        let p = &Poly::u().pow(2) + &Poly::v();
        assert_eq!(p.jet_at(&int(1), &int(1)), jet([2, 2, 1, 1, 0, 0]));
        assert_eq!(Poly::from_int(7).jet_at(&int(-3), &int(5)), jet([7, 0, 0, 0, 0, 0]));
        let uv = &Poly::u() * &Poly::v();
        assert_eq!(uv.jet_at(&int(2), &int(3)), jet([6, 3, 2, 0, 1, 0]));
    }

    #[test]
    fn canonical_print() {
        let p = Poly::monomial(crate::scalar::frac(3, 2), 1, 1) - Poly::v();
        assert_eq!(p.to_string(), "3/2*u*v - v");
        let q = Poly::u().pow(2).scale(&int(-1)) + Poly::from_int(4) + &Poly::u() * &Poly::v();
        assert_eq!(q.to_string(), "-1*u^2 + u*v + 4");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn derivatives_and_composition() {
        let p = &Poly::u().pow(3) * &Poly::v();
        assert_eq!(p.partial_u(), Poly::monomial(int(3), 2, 1));
        assert_eq!(p.partial_v(), Poly::monomial(int(1), 3, 0));
        let shifted = p.compose(&(Poly::u() + Poly::from_int(1)), &Poly::v());
        assert_eq!(shifted.eval(&int(0), &int(2)), int(2));
    }
}
