//! Points, lines, planes and hyperplanes of P4 with exact coordinates.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::linalg::mat_rank;
use crate::scalar::{fmt_scalar, is_zero_vec, normalize_first, Scalar};

/// A point of P4, stored with its first nonzero coordinate equal to 1 so that derived
/// equality is projective equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<Scalar>);

impl ProjPoint {
    /// `None` for the zero vector.
    pub fn new(coords: &[Scalar]) -> Option<Self> {
        assert_eq!(coords.len(), 5, "points of P4 have five coordinates");
        (!is_zero_vec(coords)).then(|| ProjPoint(normalize_first(coords)))
    }

    pub fn from_ints(c: [i64; 5]) -> Self {
        ProjPoint::new(&c.map(crate::scalar::int)).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_scalar).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(fmt_scalar).collect();
        parts.serialize(s)
    }
}

/// Exterior product `a ∧ b` in the basis `e_i ∧ e_j`, `i < j`, lexicographic.
pub fn plucker(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            out.push(&a[i] * &b[j] - &a[j] * &b[i]);
        }
    }
    out
}

/// Index of `p_ij` in the Plücker vector.
pub fn plucker_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 5);
    (0..i).map(|k| 4 - k).sum::<usize>() + (j - i - 1)
}

/// A line of P4 with a canonical (scale-normalized) Plücker vector.
#[derive(Clone)]
pub struct ProjLine {
    a: ProjPoint,
    b: ProjPoint,
    plucker: Vec<Scalar>,
}

impl ProjLine {
    /// `None` when the two points coincide.
    pub fn through(a: &[Scalar], b: &[Scalar]) -> Option<Self> {
        let p = plucker(a, b);
        if is_zero_vec(&p) {
            return None;
        }
        Some(ProjLine { a: ProjPoint::new(a)?, b: ProjPoint::new(b)?, plucker: normalize_first(&p) })
    }

    pub fn plucker(&self) -> &[Scalar] {
        &self.plucker
    }

    pub fn points(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.a, &self.b)
    }

    pub fn contains(&self, p: &[Scalar]) -> bool {
        span_rank(&[self.a.coords().to_vec(), self.b.coords().to_vec(), p.to_vec()]) == 2
    }
}

impl PartialEq for ProjLine {
    fn eq(&self, other: &Self) -> bool {
        self.plucker == other.plucker
    }
}

impl Eq for ProjLine {}

impl std::hash::Hash for ProjLine {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.plucker.hash(state);
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}, {:?}>", self.a, self.b)
    }
}

impl Serialize for ProjLine {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.plucker.iter().map(fmt_scalar).collect();
        parts.serialize(s)
    }
}

#[derive(Debug, Clone)]
pub struct ProjPlane {
    pub points: [ProjPoint; 3],
}

impl ProjPlane {
    pub fn new(points: [&[Scalar]; 3]) -> Option<Self> {
        if span_rank(&points.map(<[Scalar]>::to_vec)) != 3 {
            return None;
        }
        Some(ProjPlane { points: points.map(|p| ProjPoint::new(p).expect("independent")) })
    }

    pub fn contains(&self, p: &[Scalar]) -> bool {
        let mut rows: Vec<Vec<Scalar>> = self.points.iter().map(|q| q.coords().to_vec()).collect();
        rows.push(p.to_vec());
        span_rank(&rows) == 3
    }
}

impl PartialEq for ProjPlane {
    fn eq(&self, other: &Self) -> bool {
        other.points.iter().all(|p| self.contains(p.coords()))
    }
}

/// A hyperplane given by its dual coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane(pub Vec<Scalar>);

impl Hyperplane {
    pub fn coordinate(k: usize) -> Self {
        Hyperplane((0..5).map(|i| if i == k { Scalar::from_integer(1.into()) } else { Scalar::zero() }).collect())
    }

    pub fn eval(&self, p: &[Scalar]) -> Scalar {
        crate::scalar::dot(&self.0, p)
    }

    pub fn contains(&self, p: &[Scalar]) -> bool {
        self.eval(p).is_zero()
    }
}

/// Rank of the coordinate matrix of a list of vectors.
pub fn span_rank(points: &[Vec<Scalar>]) -> usize {
    mat_rank(points)
}

pub fn points_equal(a: &[Scalar], b: &[Scalar]) -> bool {
    crate::scalar::proportional(a, b)
}

/// Local dimension at a generic point of the image of a map, from its value and the
/// derivative vectors spanning the image of its differential.
pub fn image_dim(value: &[Scalar], derivatives: &[Vec<Scalar>]) -> usize {
    let mut rows = vec![value.to_vec()];
    rows.extend_from_slice(derivatives);
    span_rank(&rows) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(c: [i64; 5]) -> Vec<Scalar> {
        c.map(int).to_vec()
    }

    #[test]
    fn span_rank_examples() {
        assert_eq!(span_rank(&[v([1, 0, 0, 0, 0]), v([0, 1, 0, 0, 0]), v([0, 0, 1, 0, 0])]), 3);
        assert_eq!(span_rank(&[v([1, 0, 0, 0, 0]), v([2, 0, 0, 0, 0])]), 1);
        let frame = [v([1, 1, 1, 1, 1]), v([0, 1, 2, 0, 0]), v([0, 0, 0, 1, 2]), v([0, 0, 2, 0, 0])];
        assert_eq!(span_rank(&frame), 4);
    }

    #[test]
    fn equality_up_to_scale() {
        assert_eq!(ProjPoint::from_ints([1, 2, 0, 0, 0]), ProjPoint::from_ints([2, 4, 0, 0, 0]));
        assert_ne!(ProjPoint::from_ints([1, 0, 0, 0, 0]), ProjPoint::from_ints([0, 1, 0, 0, 0]));
        let l1 = ProjLine::through(&v([1, 0, 0, 0, 0]), &v([0, 1, 0, 0, 0])).unwrap();
        let l2 = ProjLine::through(&v([1, 1, 0, 0, 0]), &v([1, -1, 0, 0, 0])).unwrap();
        assert_eq!(l1, l2);
        assert!(ProjLine::through(&v([1, 0, 0, 0, 0]), &v([3, 0, 0, 0, 0])).is_none());
    }

    #[test]
    fn image_dim_examples() {
        let zero = v([0; 5]);
        assert_eq!(image_dim(&v([1, 0, 0, 0, 0]), &[zero.clone(), zero]), 0);
        assert_eq!(image_dim(&v([1, 3, -2, 0, 0]), &[v([0, 1, 0, 0, 0]), v([0, 0, 1, 0, 0])]), 2);
        // x = (1, u, u², v, v²) at (1, 1) with its two partials
        assert_eq!(image_dim(&v([1, 1, 1, 1, 1]), &[v([0, 1, 2, 0, 0]), v([0, 0, 0, 1, 2])]), 2);
    }

    #[test]
    fn plucker_layout() {
        assert_eq!(plucker_index(0, 1), 0);
        assert_eq!(plucker_index(0, 4), 3);
        assert_eq!(plucker_index(1, 2), 4);
        assert_eq!(plucker_index(3, 4), 9);
    }
}
