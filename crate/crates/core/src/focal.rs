//! First-order focal data on the moving plane.
//!
//! For a point `Q = a·x + b·y + c·z` of the plane, the characteristic forms are
//! `L_iu(Q) = N_i·Q_u` and `L_iv(Q) = N_i·Q_v`, with `N_1, N_2` the frame's dual hyperplanes.
//! `Q` is focal for the direction `(λ:μ)` when `λL_1u + μL_1v` and `λL_2u + μL_2v` both
//! vanish at `Q`. The focal conic is `L_1u·L_2v - L_1v·L_2u`.

use num_traits::{One, Zero};

use crate::binform::{binform_gcd, BinaryForm, FormGcd, JetBinaryForm};
use crate::error::{Error, Result};
use crate::frame::{JetFrame, PlaneCoords};
use crate::jet::{jet_dot, Jet2};
use crate::linalg::{jet_nullspace, mat_nullspace, mat_rank};
use crate::scalar::{dot, frac, int, is_zero_vec, normalize_first, proportional, Scalar};

/// The four characteristic linear forms, coefficients on `(a, b, c)`, with jet entries.
#[derive(Debug, Clone, PartialEq)]
pub struct CharForms {
    pub l1u: [Jet2; 3],
    pub l1v: [Jet2; 3],
    pub l2u: [Jet2; 3],
    pub l2v: [Jet2; 3],
}

impl CharForms {
    /// Forms with constant coefficients.
    pub fn from_constants(l1u: [Scalar; 3], l1v: [Scalar; 3], l2u: [Scalar; 3], l2v: [Scalar; 3]) -> Self {
        CharForms {
            l1u: l1u.map(Jet2::constant),
            l1v: l1v.map(Jet2::constant),
            l2u: l2u.map(Jet2::constant),
            l2v: l2v.map(Jet2::constant),
        }
    }

    /// Constant parts in the order `[L1u, L1v, L2u, L2v]`.
    pub fn values(&self) -> [[Scalar; 3]; 4] {
        let v = |f: &[Jet2; 3]| f.clone().map(|j| j.value().clone());
        [v(&self.l1u), v(&self.l1v), v(&self.l2u), v(&self.l2v)]
    }

    /// Constant coefficient rows of the two equations for the direction `(λ:μ)`.
    pub fn rows_at(&self, lambda: &Scalar, mu: &Scalar) -> [Vec<Scalar>; 2] {
        let [l1u, l1v, l2u, l2v] = self.values();
        let row = |fu: &[Scalar; 3], fv: &[Scalar; 3]| -> Vec<Scalar> {
            (0..3).map(|k| lambda * &fu[k] + mu * &fv[k]).collect()
        };
        [row(&l1u, &l1v), row(&l2u, &l2v)]
    }

    /// Jet coefficient rows for a jet direction.
    pub fn jet_rows_at(&self, lambda: &Jet2, mu: &Jet2) -> [Vec<Jet2>; 2] {
        let row = |fu: &[Jet2; 3], fv: &[Jet2; 3]| -> Vec<Jet2> {
            (0..3).map(|k| &(lambda * &fu[k]) + &(mu * &fv[k])).collect()
        };
        [row(&self.l1u, &self.l1v), row(&self.l2u, &self.l2v)]
    }

    /// Whether `Q` is focal for `(λ:μ)` according to the forms.
    pub fn is_focal(&self, q: &PlaneCoords, lambda: &Scalar, mu: &Scalar) -> bool {
        self.rows_at(lambda, mu).iter().all(|r| dot(r, q).is_zero())
    }
}

pub fn characteristic_forms(frame: &JetFrame) -> CharForms {
    let form = |n: &[Jet2], partials: &[Vec<Jet2>; 3]| -> [Jet2; 3] {
        std::array::from_fn(|k| jet_dot(n, &partials[k]))
    };
    CharForms {
        l1u: form(&frame.duals[0], &frame.points_u),
        l1v: form(&frame.duals[0], &frame.points_v),
        l2u: form(&frame.duals[1], &frame.points_u),
        l2v: form(&frame.duals[1], &frame.points_v),
    }
}

/// Symmetric matrix of a conic in plane coordinates, with its rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FocalConic {
    pub matrix: [[Scalar; 3]; 3],
    pub rank: usize,
}

impl FocalConic {
    pub fn eval(&self, q: &PlaneCoords) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += &q[i] * &self.matrix[i][j] * &q[j];
            }
        }
        acc
    }

    pub fn apply(&self, q: &PlaneCoords) -> [Scalar; 3] {
        std::array::from_fn(|i| dot(&self.matrix[i], q))
    }
}

fn symmetric_product(a: &[Scalar; 3], b: &[Scalar; 3]) -> [[Scalar; 3]; 3] {
    let half = frac(1, 2);
    std::array::from_fn(|i| std::array::from_fn(|j| (&a[i] * &b[j] + &a[j] * &b[i]) * &half))
}

pub fn focal_conic(forms: &CharForms) -> FocalConic {
    let [l1u, l1v, l2u, l2v] = forms.values();
    let p = symmetric_product(&l1u, &l2v);
    let q = symmetric_product(&l1v, &l2u);
    let matrix: [[Scalar; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| &p[i][j] - &q[i][j]));
    let rank = mat_rank(&matrix.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    FocalConic { matrix, rank }
}

/// Product of two linear binary forms given as `[coefficient of λ, coefficient of μ]`.
fn lin_mul(a: [&Scalar; 2], b: [&Scalar; 2]) -> [Scalar; 3] {
    [a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]]
}

pub(crate) fn jet_lin_mul(a: [&Jet2; 2], b: [&Jet2; 2]) -> [Jet2; 3] {
    [a[0] * b[0], &(a[0] * b[1]) + &(a[1] * b[0]), a[1] * b[1]]
}

const COLUMN_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// The three 2×2 minors of the direction matrix, as quadratic forms in `(λ, μ)`.
pub fn direction_minors(forms: &CharForms) -> [BinaryForm; 3] {
    let [l1u, l1v, l2u, l2v] = forms.values();
    COLUMN_PAIRS.map(|(j, k)| {
        let p = lin_mul([&l1u[j], &l1v[j]], [&l2u[k], &l2v[k]]);
        let q = lin_mul([&l1u[k], &l1v[k]], [&l2u[j], &l2v[j]]);
        BinaryForm::new((0..3).map(|i| &p[i] - &q[i]).collect())
    })
}

/// Same minors with jet coefficients.
pub fn jet_direction_minors(forms: &CharForms) -> [JetBinaryForm; 3] {
    let (l1u, l1v, l2u, l2v) = (&forms.l1u, &forms.l1v, &forms.l2u, &forms.l2v);
    COLUMN_PAIRS.map(|(j, k)| {
        let p = jet_lin_mul([&l1u[j], &l1v[j]], [&l2u[k], &l2v[k]]);
        let q = jet_lin_mul([&l1u[k], &l1v[k]], [&l2u[j], &l2v[j]]);
        JetBinaryForm { coeffs: (0..3).map(|i| &p[i] - &q[i]).collect() }
    })
}

/// Developable directions at the base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectionSet {
    Empty,
    /// Common roots of the minors. `rational_root` is filled when the root is forced to be
    /// rational: a single root, or a double one.
    Finite { gcd: BinaryForm, distinct_roots: usize, double: bool, rational_root: Option<(Scalar, Scalar)> },
    All,
}

impl DirectionSet {
    pub fn kind(&self) -> &'static str {
        match self {
            DirectionSet::Empty => "empty",
            DirectionSet::Finite { .. } => "finite",
            DirectionSet::All => "all",
        }
    }

    pub fn gcd_degree(&self) -> Option<usize> {
        match self {
            DirectionSet::Empty => Some(0),
            DirectionSet::Finite { gcd, .. } => Some(gcd.degree()),
            DirectionSet::All => None,
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, DirectionSet::Finite { double: true, .. })
    }

    /// Whether `(λ:μ)` is a developable direction.
    pub fn contains(&self, lambda: &Scalar, mu: &Scalar) -> bool {
        match self {
            DirectionSet::Empty => false,
            DirectionSet::Finite { gcd, .. } => gcd.eval(lambda, mu).is_zero(),
            DirectionSet::All => true,
        }
    }
}

pub fn developable_directions(forms: &CharForms) -> DirectionSet {
    match binform_gcd(&direction_minors(forms)) {
        FormGcd::AllOfP1 => DirectionSet::All,
        FormGcd::Form(g) if g.degree() == 0 => DirectionSet::Empty,
        FormGcd::Form(g) => {
            let double = g.degree() == 2 && g.discriminant().map(|d| d.is_zero()).unwrap_or(false);
            let distinct_roots = if g.degree() == 1 || double { 1 } else { 2 };
            let rational_root = if distinct_roots == 1 {
                g.rational_roots().into_iter().next().map(|(r, _)| r)
            } else {
                None
            };
            DirectionSet::Finite { gcd: g, distinct_roots, double, rational_root }
        }
    }
}

/// Focal points of the plane for one direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FocalLocus {
    Point(PlaneCoords),
    /// The line where the given linear form vanishes.
    Line([Scalar; 3]),
    WholePlane,
}

pub fn focal_locus_for_direction(forms: &CharForms, lambda: &Scalar, mu: &Scalar) -> FocalLocus {
    let rows = forms.rows_at(lambda, mu);
    match mat_rank(&rows) {
        0 => FocalLocus::WholePlane,
        1 => {
            let r = if is_zero_vec(&rows[0]) { &rows[1] } else { &rows[0] };
            FocalLocus::Line(to3(normalize_first(r)))
        }
        _ => {
            let k = mat_nullspace(&rows).pop().expect("one-dimensional kernel");
            FocalLocus::Point(to3(normalize_first(&k)))
        }
    }
}

fn to3(v: Vec<Scalar>) -> [Scalar; 3] {
    v.try_into().expect("three coordinates")
}

/// Candidate generic directions: (1:1), (1:2), (2:1), (1:3), (3:1), (2:3), ...
pub fn generic_directions() -> impl Iterator<Item = (Scalar, Scalar)> {
    (2i64..).flat_map(|s| {
        (1..s).filter_map(move |a| {
            let b = s - a;
            (num_integer::gcd(a, b) == 1).then(|| (int(a), int(b)))
        })
    })
}

/// The point that is focal for every direction, as plane coordinates with jet entries.
pub fn universal_focal_point(forms: &CharForms, dirs: &DirectionSet) -> Result<[Jet2; 3]> {
    if !matches!(dirs, DirectionSet::Finite { .. }) {
        return Err(Error::NotAPoint);
    }
    for (lambda, mu) in generic_directions().take(12) {
        if dirs.contains(&lambda, &mu) {
            continue;
        }
        match focal_locus_for_direction(forms, &lambda, &mu) {
            FocalLocus::Point(_) => {
                let rows = forms.jet_rows_at(&Jet2::constant(lambda), &Jet2::constant(mu));
                let k = jet_nullspace(&rows)?;
                let [p]: [Vec<Jet2>; 1] = k.try_into().map_err(|_| Error::NotAPoint)?;
                return Ok(p.try_into().expect("three coordinates"));
            }
            _ => return Err(Error::NotAPoint),
        }
    }
    Err(Error::NotAPoint)
}

/// Eigenvector structure of the matrix relating two pencils with a common base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eigen {
    TwoDistinct,
    Double,
    /// A multiple of the identity: every direction is an eigenvector.
    All,
}

/// How the two pencils `λL1u + μL1v` and `λL2u + μL2v` sit relative to each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PencilConfig {
    /// Exactly one pencil (1 or 2) collapses to a line, and that line is not in the other.
    OneDegenerate { pencil: usize },
    BothDegenerateDistinct,
    BothDegenerateCoincident,
    DistinctBasePoints,
    /// `matrix = [[λ1, λ2], [μ1, μ2]]` expresses one pencil's forms in the other's.
    SameBasePoint { eigen: Eigen, matrix: [[Scalar; 2]; 2], disc: Scalar },
}

impl PencilConfig {
    pub fn name(&self) -> &'static str {
        match self {
            PencilConfig::OneDegenerate { .. } => "OneDegenerate",
            PencilConfig::BothDegenerateDistinct => "BothDegenerateDistinct",
            PencilConfig::BothDegenerateCoincident => "BothDegenerateCoincident",
            PencilConfig::DistinctBasePoints => "DistinctBasePoints",
            PencilConfig::SameBasePoint { .. } => "SameBasePoint",
        }
    }
}

fn cross(a: &[Scalar; 3], b: &[Scalar; 3]) -> [Scalar; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Solves `h = s·g1 + t·g2` exactly, assuming `g1, g2` independent.
fn coordinates_in_pencil(g1: &[Scalar; 3], g2: &[Scalar; 3], h: &[Scalar; 3]) -> Option<(Scalar, Scalar)> {
    for (j, k) in COLUMN_PAIRS {
        let det = &g1[j] * &g2[k] - &g1[k] * &g2[j];
        if det.is_zero() {
            continue;
        }
        let s = (&h[j] * &g2[k] - &h[k] * &g2[j]) / &det;
        let t = (&g1[j] * &h[k] - &g1[k] * &h[j]) / &det;
        let ok = (0..3).all(|i| &s * &g1[i] + &t * &g2[i] == h[i]);
        return ok.then_some((s, t));
    }
    None
}

pub fn pencil_configuration(forms: &CharForms) -> Result<PencilConfig> {
    let [f11, f21, f12, f22] = forms.values();
    let zero = |f: &[Scalar; 3]| is_zero_vec(f);
    if (zero(&f11) && zero(&f21)) || (zero(&f12) && zero(&f22)) {
        return Err(Error::ZeroPencil);
    }
    let deg1 = proportional(&f11, &f21) || zero(&f11) || zero(&f21);
    let deg2 = proportional(&f12, &f22) || zero(&f12) || zero(&f22);
    let line_of = |a: &[Scalar; 3], b: &[Scalar; 3]| if zero(a) { b.clone() } else { a.clone() };
    match (deg1, deg2) {
        (true, true) => {
            if proportional(&line_of(&f11, &f21), &line_of(&f12, &f22)) {
                Ok(PencilConfig::BothDegenerateCoincident)
            } else {
                Ok(PencilConfig::BothDegenerateDistinct)
            }
        }
        (true, false) | (false, true) => {
            // The reference pencil is the nondegenerate one.
            let (g1, g2, h1, h2, degenerate) =
                if deg1 { (&f12, &f22, &f11, &f21, 1) } else { (&f11, &f21, &f12, &f22, 2) };
            let line = line_of(h1, h2);
            let base = cross(g1, g2);
            if !dot(&line, &base).is_zero() {
                return Ok(PencilConfig::OneDegenerate { pencil: degenerate });
            }
            same_base_point(g1, g2, h1, h2)
        }
        (false, false) => {
            if proportional(&cross(&f11, &f21), &cross(&f12, &f22)) {
                same_base_point(&f11, &f21, &f12, &f22)
            } else {
                Ok(PencilConfig::DistinctBasePoints)
            }
        }
    }
}

fn same_base_point(g1: &[Scalar; 3], g2: &[Scalar; 3], h1: &[Scalar; 3], h2: &[Scalar; 3]) -> Result<PencilConfig> {
    let (l1, m1) = coordinates_in_pencil(g1, g2, h1).ok_or(Error::ZeroPencil)?;
    let (l2, m2) = coordinates_in_pencil(g1, g2, h2).ok_or(Error::ZeroPencil)?;
    let diff = &m2 - &l1;
    let disc = &diff * &diff + int(4) * &m1 * &l2;
    let eigen = if m1.is_zero() && l2.is_zero() && l1 == m2 {
        Eigen::All
    } else if disc.is_zero() {
        Eigen::Double
    } else {
        Eigen::TwoDistinct
    };
    Ok(PencilConfig::SameBasePoint { eigen, matrix: [[l1, l2], [m1, m2]], disc })
}

/// `(λ:μ)` normalized for display: `(r:1)` or `(1:0)`.
pub fn normalize_direction(lambda: &Scalar, mu: &Scalar) -> (Scalar, Scalar) {
    if mu.is_zero() {
        (Scalar::one(), Scalar::zero())
    } else {
        (lambda / mu, Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::parse_chart;
    use crate::frame::eval_frame;

    const DELTA: &str = "vars: u v\npoint: [1,0,0,0,0]\npoint: [0,1,0,0,0]\npoint: [0,0,1,u,v]\n";
    const BETA: &str =
        "vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n";
    const CONE: &str = "vars: u v\npoint: [0,0,0,0,1]\npoint: [1,u,0,0,0]\npoint: [0,0,1,v,0]\n";

    fn forms(text: &str) -> CharForms {
        characteristic_forms(&eval_frame(&parse_chart(text).unwrap(), (&int(1), &int(1))).unwrap())
    }

    fn s3(c: [i64; 3]) -> [Scalar; 3] {
        c.map(int)
    }

    #[test]
    fn delta_forms_only_see_c() {
        let [l1u, l1v, l2u, l2v] = forms(DELTA).values();
        // Dual normalization gives +c here; the sign is a convention of the basis.
        assert_eq!(l1u, s3([0, 0, 1]));
        assert_eq!(l1v, s3([0, 0, 0]));
        assert_eq!(l2u, s3([0, 0, 0]));
        assert_eq!(l2v, s3([0, 0, 1]));
    }

    #[test]
    fn beta_forms() {
        let [l1u, l1v, l2u, l2v] = forms(BETA).values();
        assert_eq!(l1u, s3([0, 2, 0]));
        assert_eq!(l1v, s3([0, 0, 0]));
        assert_eq!(l2u, s3([0, 0, 0]));
        assert_eq!(l2v, s3([0, 0, 2]));
    }

    #[test]
    fn constant_chart_has_zero_forms() {
        let text = "vars: u v\npoint: [1,0,0,0,0]\npoint: [0,1,0,0,0]\npoint: [0,0,1,0,0]\n";
        let f = forms(text);
        assert!(f.values().iter().all(|r| is_zero_vec(r)));
    }

    #[test]
    fn conics() {
        let d = focal_conic(&forms(DELTA));
        assert_eq!(d.rank, 1);
        assert_eq!(d.matrix, [s3([0, 0, 0]), s3([0, 0, 0]), s3([0, 0, 1])]);
        let b = focal_conic(&forms(BETA));
        assert_eq!(b.rank, 2);
        assert_eq!(b.matrix, [s3([0, 0, 0]), s3([0, 0, 2]), s3([0, 2, 0])]);
    }

    #[test]
    fn directions() {
        assert_eq!(developable_directions(&forms(DELTA)), DirectionSet::All);
        let minors = direction_minors(&forms(BETA));
        assert!(minors[0].is_zero() && minors[1].is_zero());
        assert_eq!(minors[2], BinaryForm::from_ints(&[0, 4, 0]));
        match developable_directions(&forms(BETA)) {
            DirectionSet::Finite { gcd, distinct_roots, double, rational_root } => {
                assert_eq!(gcd, BinaryForm::from_ints(&[0, 1, 0]));
                assert_eq!(distinct_roots, 2);
                assert!(!double);
                assert_eq!(rational_root, None);
                assert_eq!(gcd.rational_roots(), vec![((int(1), int(0)), 1), ((int(0), int(1)), 1)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn loci() {
        let f = forms(BETA);
        assert_eq!(focal_locus_for_direction(&f, &int(1), &int(1)), FocalLocus::Point(s3([1, 0, 0])));
        assert_eq!(focal_locus_for_direction(&f, &int(1), &int(0)), FocalLocus::Line(s3([0, 1, 0])));
        let d = forms(DELTA);
        assert_eq!(focal_locus_for_direction(&d, &int(3), &int(-2)), FocalLocus::Line(s3([0, 0, 1])));
    }

    #[test]
    fn universal_point_of_translation_surface() {
        let chart = parse_chart(BETA).unwrap();
        let frame = eval_frame(&chart, (&int(1), &int(1))).unwrap();
        let f = characteristic_forms(&frame);
        let p = universal_focal_point(&f, &developable_directions(&f)).unwrap();
        assert_eq!(p, [Jet2::one(), Jet2::zero(), Jet2::zero()]);
        let x = frame.plane_point(&p);
        let expect: Vec<Jet2> = chart.maps[0].iter().map(|q| q.jet_at(&int(1), &int(1))).collect();
        assert_eq!(x, expect);
        let conic = focal_conic(&f);
        assert!(is_zero_vec(&conic.apply(&s3([1, 0, 0]))));
    }

    #[test]
    fn universal_point_of_cone_is_vertex() {
        let chart = parse_chart(CONE).unwrap();
        let frame = eval_frame(&chart, (&int(1), &int(1))).unwrap();
        let f = characteristic_forms(&frame);
        let p = universal_focal_point(&f, &developable_directions(&f)).unwrap();
        let point = frame.plane_point(&p);
        assert!(proportional(&crate::jet::values(&point), &[0, 0, 0, 0, 1].map(int)));
        assert!(crate::jet::d_u(&point).iter().all(Zero::is_zero));
        assert!(crate::jet::d_v(&point).iter().all(Zero::is_zero));
    }

    #[test]
    fn pencils_of_worked_charts() {
        assert_eq!(pencil_configuration(&forms(BETA)), Ok(PencilConfig::BothDegenerateDistinct));
        assert_eq!(pencil_configuration(&forms(DELTA)), Ok(PencilConfig::BothDegenerateCoincident));
    }

    #[test]
    fn jordan_pencils() {
        let f11 = s3([1, 0, 0]);
        let f21 = s3([0, 1, 0]);
        // A = [[λ1, λ2], [μ1, μ2]] = [[1, -1], [1, 3]] has the double eigenvalue 2.
        let comb = |a: i64, b: i64| -> [Scalar; 3] { std::array::from_fn(|i| int(a) * &f11[i] + int(b) * &f21[i]) };
        let forms = CharForms::from_constants(f11.clone(), f21.clone(), comb(1, 1), comb(-1, 3));
        match pencil_configuration(&forms).unwrap() {
            PencilConfig::SameBasePoint { eigen, disc, .. } => {
                assert_eq!(eigen, Eigen::Double);
                assert!(disc.is_zero());
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(focal_conic(&forms).rank, 1);
        let forms = CharForms::from_constants(f11.clone(), f21.clone(), comb(1, 0), comb(0, 2));
        assert!(matches!(
            pencil_configuration(&forms).unwrap(),
            PencilConfig::SameBasePoint { eigen: Eigen::TwoDistinct, .. }
        ));
        assert_eq!(focal_conic(&forms).rank, 2);
    }

    #[test]
    fn zero_pencil_is_an_error() {
        let z = s3([0, 0, 0]);
        let forms = CharForms::from_constants(z.clone(), z.clone(), s3([1, 0, 0]), s3([0, 1, 0]));
        assert_eq!(pencil_configuration(&forms), Err(Error::ZeroPencil));
    }

    #[test]
    fn generic_direction_sequence() {
        let d: Vec<_> = generic_directions().take(5).collect();
        assert_eq!(d, vec![(int(1), int(1)), (int(1), int(2)), (int(2), int(1)), (int(1), int(3)), (int(3), int(1))]);
    }
}
