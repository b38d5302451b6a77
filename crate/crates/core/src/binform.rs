//! Homogeneous binary forms in `(λ, μ)`.
//!
//! Coefficients are stored from the highest power of `λ` down:
//! `coeffs[i]` multiplies `λ^(d-i) μ^i`. The zero form keeps its nominal degree.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::jet::Jet2;
use crate::scalar::{rational_sqrt, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    pub coeffs: Vec<Scalar>,
}

/// Outcome of a gcd of binary forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormGcd {
    /// Every input was the zero form, so every `(λ:μ)` is a common root.
    AllOfP1,
    Form(BinaryForm),
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().copied().map(crate::scalar::int).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, lambda: &Scalar, mu: &Scalar) -> Scalar {
        let d = self.degree();
        self.coeffs.iter().enumerate().fold(Scalar::zero(), |acc, (i, c)| {
            acc + c * pow(lambda, d - i) * pow(mu, i)
        })
    }

    /// `b² - 4ac` for `aλ² + bλμ + cμ²`.
    pub fn discriminant(&self) -> Result<Scalar> {
        if self.degree() != 2 {
            return Err(Error::WrongDegree { expected: 2, found: self.degree() });
        }
        let [a, b, c] = [&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]];
        Ok(b * b - Scalar::from_integer(4.into()) * a * c)
    }

    /// Rescaled so the first nonzero coefficient is 1.
    pub fn monic(&self) -> BinaryForm {
        BinaryForm { coeffs: crate::scalar::normalize_first(&self.coeffs) }
    }

    pub fn mul(&self, rhs: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Exact division; `None` when `divisor` does not divide `self` or is zero.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Option<BinaryForm> {
        let s = divisor.coeffs.iter().position(|c| !c.is_zero())?;
        if divisor.degree() > self.degree() {
            return None;
        }
        // Coefficient arrays multiply by convolution, so solve for the quotient from the
        // low end and check the product afterwards.
        let qlen = self.degree() - divisor.degree() + 1;
        let mut quot: Vec<Scalar> = Vec::with_capacity(qlen);
        for j in 0..qlen {
            let mut acc = self.coeffs.get(j + s).cloned().unwrap_or_else(Scalar::zero);
            for (i, h) in quot.iter().enumerate() {
                if let Some(g) = divisor.coeffs.get(j + s - i) {
                    acc -= h * g;
                }
            }
            quot.push(acc / &divisor.coeffs[s]);
        }
        let quot = BinaryForm { coeffs: quot };
        (divisor.mul(&quot) == *self).then_some(quot)
    }

    /// Rational roots `(λ:μ)` with multiplicities, for forms of degree at most 2.
    /// Irrational root pairs are omitted.
    pub fn rational_roots(&self) -> Vec<((Scalar, Scalar), usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        match self.degree() {
            0 => Vec::new(),
            1 => {
                let (a, b) = (&self.coeffs[0], &self.coeffs[1]);
                vec![(root_point(b, &-a), 1)]
            }
            2 => {
                let (a, b, c) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
                if a.is_zero() {
                    // μ·(bλ + cμ)
                    let mut out = vec![((Scalar::one(), Scalar::zero()), 1)];
                    if b.is_zero() {
                        out[0].1 = 2;
                    } else {
                        out.push((root_point(c, &-b), 1));
                    }
                    return out;
                }
                let disc = self.discriminant().expect("degree 2");
                let two_a = a * Scalar::from_integer(2.into());
                if disc.is_zero() {
                    return vec![((-b / &two_a, Scalar::one()), 2)];
                }
                match rational_sqrt(&disc) {
                    Some(s) => {
                        let mut roots =
                            vec![((( -b + &s) / &two_a, Scalar::one()), 1), (((-b - &s) / &two_a, Scalar::one()), 1)];
                        roots.sort();
                        roots
                    }
                    None => Vec::new(),
                }
            }
            _ => Vec::new(),
        }
    }

    /// Dehomogenized univariate coefficients (low to high) after stripping `μ^k`.
    fn split_mu(&self) -> (usize, Vec<Scalar>) {
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        let d = self.degree();
        // Remaining coefficient of λ^(d-i) for i >= k.
        (k, (k..=d).rev().map(|i| self.coeffs[i].clone()).collect())
    }
}

/// Normalized projective representative of the root of `pλ + qμ` style data.
fn root_point(l: &Scalar, m: &Scalar) -> (Scalar, Scalar) {
    if m.is_zero() {
        (Scalar::one(), Scalar::zero())
    } else {
        (l / m, Scalar::one())
    }
}

fn pow(x: &Scalar, e: usize) -> Scalar {
    (0..e).fold(Scalar::one(), |acc, _| acc * x)
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (a, b) => {
                    let mut s = Vec::new();
                    if a > 0 {
                        s.push(if a == 1 { "l".to_string() } else { format!("l^{a}") });
                    }
                    if b > 0 {
                        s.push(if b == 1 { "m".to_string() } else { format!("m^{b}") });
                    }
                    s.join("*")
                }
            };
            let neg = c < &Scalar::zero();
            let abs = if neg { -c } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// ---- univariate helpers (coefficients low to high) ----

fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn uni_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let f = r.last().expect("nonempty") / lead;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &f * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn uni_gcd(a: Vec<Scalar>, b: Vec<Scalar>) -> Vec<Scalar> {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Monic gcd of the nonzero inputs; [`FormGcd::AllOfP1`] when all inputs vanish.
pub fn binform_gcd(forms: &[BinaryForm]) -> FormGcd {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return FormGcd::AllOfP1;
    }
    let mut k_min = usize::MAX;
    let mut g: Vec<Scalar> = Vec::new();
    for f in nonzero {
        let (k, uni) = f.split_mu();
        k_min = k_min.min(k);
        g = uni_gcd(g, uni);
    }
    // Homogenize: λ-degree of g, times μ^k_min.
    let dg = g.len() - 1;
    let mut coeffs: Vec<Scalar> = std::iter::repeat_with(Scalar::zero).take(k_min).collect();
    coeffs.extend((0..=dg).rev().map(|e| g[e].clone()));
    FormGcd::Form(BinaryForm { coeffs }.monic())
}

/// A binary quadratic (or lower) form with jet coefficients, used to follow a simple root
/// as the base point moves.
#[derive(Debug, Clone, PartialEq)]
pub struct JetBinaryForm {
    pub coeffs: Vec<Jet2>,
}

impl JetBinaryForm {
    pub fn constant_part(&self) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|c| c.value().clone()).collect())
    }

    fn eval_dehomogenized(&self, t: &Jet2, lambda_chart: bool) -> (Jet2, Jet2) {
        // In the μ = 1 chart the form is Σ c_i t^(d-i); in the λ = 1 chart it is Σ c_i t^i.
        let d = self.coeffs.len() - 1;
        let mut val = Jet2::zero();
        let mut der = Jet2::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = if lambda_chart { i } else { d - i };
            val += &(c * &jet_pow(t, e));
            if e > 0 {
                der += &(&c.scale(&Scalar::from_integer((e as i64).into())) * &jet_pow(t, e - 1));
            }
        }
        (val, der)
    }

    /// Follows the simple root `(λ0:μ0)` of the constant part through the jet ring by Newton
    /// iteration. Returns jets `(λ, μ)` with one of them identically 1.
    pub fn lift_simple_root(&self, root: &(Scalar, Scalar)) -> Result<(Jet2, Jet2)> {
        let lambda_chart = root.1.is_zero();
        let start = if lambda_chart { &root.1 / &root.0 } else { &root.0 / &root.1 };
        let mut t = Jet2::constant(start);
        for _ in 0..3 {
            let (val, der) = self.eval_dehomogenized(&t, lambda_chart);
            if !der.is_unit() {
                return Err(Error::MultipleRoot);
            }
            t = &t - &val.checked_div(&der)?;
        }
        let (val, _) = self.eval_dehomogenized(&t, lambda_chart);
        if !val.is_zero() {
            return Err(Error::MultipleRoot);
        }
        Ok(if lambda_chart { (Jet2::one(), t) } else { (t, Jet2::one()) })
    }
}

fn jet_pow(x: &Jet2, e: usize) -> Jet2 {
    (0..e).fold(Jet2::one(), |acc, _| &acc * x)
}
