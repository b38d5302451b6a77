//! Exact elimination over rationals and over the jet ring.
//!
//! Both rings share one reduced-row-echelon routine. Pivots are taken column by column from
//! the first remaining row holding a unit; for rationals every nonzero entry is a unit. The
//! nullspace basis is the canonical one attached to the echelon form: one vector per free
//! column, with a 1 in that column and 0 in the other free columns. Because the basis only
//! depends on which columns are pivots, the constant part of a jet nullspace coincides with
//! the rational nullspace of the constant matrix.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::jet::Jet2;
use crate::scalar::Scalar;

pub type Matrix<R> = Vec<Vec<R>>;

/// The small amount of ring structure elimination needs.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn inv(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        !Zero::is_zero(self)
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Ring for Jet2 {
    fn zero() -> Self {
        Jet2::zero()
    }
    fn one() -> Self {
        Jet2::one()
    }
    fn is_zero(&self) -> bool {
        Jet2::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        Jet2::is_unit(self)
    }
    fn inv(&self) -> Self {
        self.inverse().expect("pivot is a unit")
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon<R> {
    pub rows: Matrix<R>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

/// Reduced row echelon form with unit pivots. Fails with [`Error::PivotNotUnit`] when
/// a nonzero non-unit entry survives elimination.
pub fn echelon<R: Ring>(m: &[Vec<R>]) -> Result<Echelon<R>> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rows: Matrix<R> = m.to_vec();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(p) = (next..rows.len()).find(|&r| rows[r][col].is_unit()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][col].inv();
        for x in rows[next].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.sub(&f.mul(p));
            }
        }
        pivots.push(col);
        next += 1;
    }
    if rows[next..].iter().any(|row| row.iter().any(|x| !x.is_zero())) {
        return Err(Error::PivotNotUnit);
    }
    rows.truncate(next);
    Ok(Echelon { rows, pivots, ncols })
}

impl<R: Ring> Echelon<R> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical kernel basis, one vector per free column in increasing column order.
    pub fn kernel(&self) -> Vec<Vec<R>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![R::zero(); self.ncols];
                v[f] = R::one();
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = R::zero().sub(&row[f]);
                }
                v
            })
            .collect()
    }
}

pub fn mat_rank(m: &[Vec<Scalar>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    echelon(m).map(|e| e.rank()).expect("rational elimination never lacks a unit pivot")
}

pub fn mat_nullspace(m: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    echelon(m).expect("rational elimination never lacks a unit pivot").kernel()
}

/// Nullspace over the jet ring; see the module docs for the basis convention.
pub fn jet_nullspace(m: &[Vec<Jet2>]) -> Result<Vec<Vec<Jet2>>> {
    Ok(echelon(m)?.kernel())
}

/// Constant parts of a jet matrix.
pub fn constant_part(m: &[Vec<Jet2>]) -> Matrix<Scalar> {
    m.iter().map(|row| row.iter().map(|j| j.value().clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix<Scalar> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(<Scalar as Zero>::zero(), |acc, (x, brow)| acc + x * &brow[j]))
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|row| crate::scalar::dot(row, v)).collect()
}

pub fn transpose<R: Clone>(a: &[Vec<R>]) -> Matrix<R> {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn determinant(a: &[Vec<Scalar>]) -> Scalar {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = <Scalar as One>::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !Zero::is_zero(&m[r][col])) else {
            return <Scalar as Zero>::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if Zero::is_zero(&m[r][col]) {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

pub fn identity(n: usize) -> Matrix<Scalar> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { <Scalar as One>::one() } else { <Scalar as Zero>::zero() }).collect())
        .collect()
}
