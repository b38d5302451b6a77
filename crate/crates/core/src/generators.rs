//! Seeded charts of every class, built from the geometric characterization of each class.
//!
//! Each recipe draws random data, checks its own genericity side conditions with rank tests
//! at a random base point, and retries with fresh data when a condition fails.

use num_traits::Zero;

use crate::chart::{PlaneChart, PointMap};
use crate::error::{Error, Result};
use crate::focal::{characteristic_forms, focal_conic, CharForms};
use crate::frame::eval_frame;
use crate::label::ClassLabel;
use crate::linalg::mat_rank;
use crate::poly::Poly;
use crate::proj::{ProjLine, ProjPoint};
use crate::sampling::{validate_chart, Sampler, SamplingConfig};
use crate::scalar::{int, Scalar};
use crate::transform::{random_invertible, transform_chart, ChartAction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub class: ClassLabel,
    pub seed: u64,
    /// Upper bound on the degree of the chart's coordinates.
    pub degree: u32,
    /// Bound on the integer coefficients drawn.
    pub height: i64,
}

impl GenSpec {
    pub fn new(class: ClassLabel, seed: u64) -> Self {
        GenSpec { class, seed, degree: 4, height: 3 }
    }
}

/// Data planted by a construction, against which classification results can be compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planted {
    Line(ProjLine),
    Vertex(ProjPoint),
    Nothing,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub chart: PlaneChart,
    pub expected: ClassLabel,
    pub witness: Planted,
}

const ATTEMPTS: usize = 20;

type Vec5 = PointMap;

fn constant(v: &[Scalar]) -> Vec5 {
    std::array::from_fn(|k| Poly::constant(v[k].clone()))
}

fn add(a: &Vec5, b: &Vec5) -> Vec5 {
    std::array::from_fn(|k| &a[k] + &b[k])
}

fn times(p: &Poly, a: &Vec5) -> Vec5 {
    std::array::from_fn(|k| p * &a[k])
}

fn du(a: &Vec5) -> Vec5 {
    std::array::from_fn(|k| a[k].partial_u())
}

fn dv(a: &Vec5) -> Vec5 {
    std::array::from_fn(|k| a[k].partial_v())
}

fn eval(a: &Vec5, base: &(Scalar, Scalar)) -> Vec<Scalar> {
    a.iter().map(|p| p.eval(&base.0, &base.1)).collect()
}

fn rank_at(maps: &[&Vec5], base: &(Scalar, Scalar)) -> usize {
    mat_rank(&maps.iter().map(|m| eval(m, base)).collect::<Vec<_>>())
}

fn is_zero_map(a: &Vec5) -> bool {
    a.iter().all(Poly::is_zero)
}

struct Draw<'a> {
    s: &'a mut Sampler,
    height: i64,
}

impl Draw<'_> {
    fn vector(&mut self) -> Vec<Scalar> {
        loop {
            let v: Vec<Scalar> = (0..5).map(|_| self.s.small_int(self.height)).collect();
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    /// `Σ_k a_k·var^k` for `k` in `powers`, with random vector coefficients.
    fn curve(&mut self, var: &Poly, powers: std::ops::RangeInclusive<u32>) -> Vec5 {
        let mut out = constant(&[int(0), int(0), int(0), int(0), int(0)]);
        for k in powers {
            out = add(&out, &times(&var.pow(k), &constant(&self.vector())));
        }
        out
    }

    /// `T·(1, t, t², t³, t⁴)` for a random invertible `T`.
    fn normal_curve(&mut self, var: &Poly) -> Vec5 {
        let t = random_invertible(self.s, 5, self.height);
        let mut out = constant(&[int(0), int(0), int(0), int(0), int(0)]);
        for k in 0..5 {
            let column: Vec<Scalar> = (0..5).map(|i| t[i][k].clone()).collect();
            out = add(&out, &times(&var.pow(k as u32), &constant(&column)));
        }
        out
    }

    /// Random point map with monomials `u^i v^j`, `i + j <= degree`.
    fn surface(&mut self, degree: u32) -> Vec5 {
        let mut out = constant(&[int(0), int(0), int(0), int(0), int(0)]);
        for d in 0..=degree {
            for i in 0..=d {
                let mono = &Poly::u().pow(i) * &Poly::v().pow(d - i);
                out = add(&out, &times(&mono, &constant(&self.vector())));
            }
        }
        out
    }
}

fn min_degree(class: ClassLabel) -> u32 {
    use ClassLabel::*;
    match class {
        Delta | Beta3 | Gamma3 => 1,
        Beta1 | Gamma1 | Alpha2 | Alpha3 | IrreducibleConic => 2,
        Alpha1 => 3,
        Beta2 | Gamma2 => 4,
        OutOfScopeFocalPlane | DegenerateCongruence => u32::MAX,
    }
}

/// One attempt: a chart plus the side condition it must pass at a random base point.
fn attempt(class: ClassLabel, spec: &GenSpec, s: &mut Sampler) -> Option<(PlaneChart, Planted)> {
    use ClassLabel::*;
    let base = s.base();
    let deg = spec.degree;
    let mut d = Draw { s, height: spec.height.max(1) };
    let (u, v) = (Poly::u(), Poly::v());
    let (maps, planted): ([Vec5; 3], Planted) = match class {
        Delta => {
            let (p1, p2) = (d.vector(), d.vector());
            let line = ProjLine::through(&p1, &p2)?;
            let m = d.surface(deg.min(2));
            ([constant(&p1), constant(&p2), m], Planted::Line(line))
        }
        Beta1 => {
            // translation surface: x_uv = 0, so the parameter curves form a conjugate net
            let k = deg.min(4);
            let x = add(&d.curve(&u, 0..=k), &d.curve(&v, 1..=k));
            ([x.clone(), du(&x), dv(&x)], Planted::Nothing)
        }
        Gamma1 => {
            // ruled surface: x_vv = 0, the rulings are asymptotic
            let k = deg.min(4) - 1;
            let (c, e) = (d.curve(&u, 0..=k), d.curve(&u, 0..=k));
            let x = add(&c, &times(&v, &e));
            if rank_at(&[&c, &e, &du(&c), &du(&e)], &base) < 4 {
                return None;
            }
            ([x.clone(), du(&x), dv(&x)], Planted::Nothing)
        }
        Beta2 => {
            // planes through tangent lines, moving in a pencil that misses the osculating plane
            let c = d.normal_curve(&u);
            let m = add(&d.curve(&u, 0..=1), &times(&v, &d.curve(&u, 0..=1)));
            if rank_at(&[&c, &du(&c), &m, &du(&du(&c)), &dv(&m)], &base) < 5 {
                return None;
            }
            ([c.clone(), du(&c), m], Planted::Nothing)
        }
        Gamma2 => {
            let c = d.normal_curve(&u);
            let w = constant(&d.vector());
            let third = add(&du(&du(&c)), &times(&v, &w));
            if rank_at(&[&c, &du(&c), &du(&du(&c)), &w], &base) < 4 {
                return None;
            }
            ([c.clone(), du(&c), third], Planted::Nothing)
        }
        Beta3 | Gamma3 => {
            let e = |k: usize| -> Vec<Scalar> { (0..5).map(|i| int(i64::from(i == k))).collect() };
            let vertex = constant(&e(4));
            let a = add(&constant(&e(0)), &times(&u, &constant(&e(1))));
            let b = if class == Beta3 {
                add(&constant(&e(2)), &times(&v, &constant(&e(3))))
            } else {
                add(&add(&constant(&e(2)), &times(&v, &constant(&e(1)))), &times(&u, &constant(&e(3))))
            };
            let chart = PlaneChart::new([vertex, a, b]);
            let t = random_invertible(d.s, 5, d.height);
            let image: Vec<Scalar> = (0..5).map(|i| t[i][4].clone()).collect();
            let chart = transform_chart(&chart, &ChartAction::Projective(t)).ok()?;
            return Some((chart, Planted::Vertex(ProjPoint::new(&image)?)));
        }
        Alpha1 => {
            // osculating planes of the u-curves of a surface
            let x = d.surface(deg.min(3));
            let xu = du(&x);
            if rank_at(&[&x, &xu, &dv(&x), &du(&xu), &dv(&xu)], &base) < 5 {
                return None;
            }
            ([x.clone(), xu.clone(), du(&xu)], Planted::Nothing)
        }
        Alpha2 => {
            // tangent planes of a one-parameter family of cones with vertices on a curve
            let c = d.curve(&u, 0..=2);
            let h = add(&add(&d.curve(&u, 0..=1), &times(&v, &d.curve(&u, 0..=1))), &times(&v.pow(2), &constant(&d.vector())));
            let hv = dv(&h);
            if rank_at(&[&c, &h, &hv, &dv(&hv), &du(&c)], &base) < 5 {
                return None;
            }
            ([c, h, hv], Planted::Nothing)
        }
        Alpha3 => {
            // planes through the rulings of a non-developable ruled surface
            let (a, b) = (d.curve(&u, 0..=2), d.curve(&u, 0..=2));
            let m = add(&add(&d.curve(&u, 0..=1), &times(&v, &d.curve(&u, 0..=1))), &times(&v.pow(2), &constant(&d.vector())));
            if rank_at(&[&a, &b, &du(&a), &du(&b)], &base) < 4 {
                return None;
            }
            ([a, b, m], Planted::Nothing)
        }
        IrreducibleConic => {
            let maps = [d.surface(deg.min(2)), d.surface(deg.min(2)), d.surface(deg.min(2))];
            let chart = PlaneChart::new(maps.clone());
            let frame = eval_frame(&chart, (&base.0, &base.1)).ok()?;
            let forms: CharForms = characteristic_forms(&frame);
            if focal_conic(&forms).rank < 3 {
                return None;
            }
            (maps, Planted::Nothing)
        }
        OutOfScopeFocalPlane | DegenerateCongruence => return None,
    };
    if maps.iter().any(is_zero_map) {
        return None;
    }
    Some((PlaneChart::new(maps), planted))
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let class = spec.class;
    if spec.degree < min_degree(class) {
        return Err(Error::GenerationFailed(class));
    }
    let mut s = Sampler::from_seed(spec.seed);
    for _ in 0..ATTEMPTS {
        let Some((chart, witness)) = attempt(class, spec, &mut s) else {
            continue;
        };
        let cfg = SamplingConfig { seed: spec.seed, samples: 2, ..Default::default() };
        if !matches!(validate_chart(&chart, &cfg), Ok(v) if v.ok) {
            continue;
        }
        let name = format!("{}-{}", class.slug(), spec.seed);
        return Ok(Generated { chart: chart.with_expect(class).with_name(name), expected: class, witness });
    }
    Err(Error::GenerationFailed(class))
}

/// The three one-parameter developable families: planes through a fixed line, tangent
/// planes of a cone, osculating planes of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DevelopableFamily {
    ThroughLine,
    Cone,
    Osculating,
}

pub fn developable_family(kind: DevelopableFamily, seed: u64) -> (PlaneChart, Planted) {
    let mut s = Sampler::from_seed(seed);
    let u = Poly::u();
    let mut d = Draw { s: &mut s, height: 3 };
    loop {
        let (maps, planted) = match kind {
            DevelopableFamily::ThroughLine => {
                let (p1, p2) = (d.vector(), d.vector());
                let Some(line) = ProjLine::through(&p1, &p2) else { continue };
                ([constant(&p1), constant(&p2), d.curve(&u, 0..=2)], Planted::Line(line))
            }
            DevelopableFamily::Cone => {
                let vertex = d.vector();
                let dir = d.curve(&u, 0..=3);
                ([constant(&vertex), dir.clone(), du(&dir)], Planted::Vertex(ProjPoint::new(&vertex).expect("nonzero")))
            }
            DevelopableFamily::Osculating => {
                let c = d.normal_curve(&u);
                ([c.clone(), du(&c), du(&du(&c))], Planted::Nothing)
            }
        };
        let t = d.s.scalar();
        let ranks = rank_at(&[&maps[0], &maps[1], &maps[2]], &(t, int(0)));
        let extra_ok = match kind {
            // the moving point must leave the line's span
            DevelopableFamily::ThroughLine => rank_at(&[&maps[0], &maps[1], &maps[2], &du(&maps[2])], &(int(1), int(0))) == 4,
            // the directrix must not lie in a plane with the vertex
            DevelopableFamily::Cone => rank_at(&[&maps[0], &maps[1], &maps[2], &du(&maps[2])], &(int(1), int(0))) == 4,
            DevelopableFamily::Osculating => true,
        };
        if ranks == 3 && extra_ok {
            return (PlaneChart::new(maps), planted);
        }
    }
}

/// A chart whose characteristic forms at `(0, 0)` are exactly the given pencils.
///
/// The forms are `L1u = f11`, `L1v = f21`, `L2u = f12`, `L2v = f22`, with `f12 = λ1·f11 + μ1·f21`
/// and `f22 = λ2·f11 + μ2·f21` where `matrix = [[λ1, λ2], [μ1, μ2]]`.
pub fn jordan_pencil_chart(f11: [Scalar; 3], f21: [Scalar; 3], matrix: [[Scalar; 2]; 2]) -> (PlaneChart, [[Scalar; 3]; 4]) {
    let [[l1, l2], [m1, m2]] = matrix;
    let comb = |a: &Scalar, b: &Scalar| -> [Scalar; 3] { std::array::from_fn(|i| a * &f11[i] + b * &f21[i]) };
    let f12 = comb(&l1, &m1);
    let f22 = comb(&l2, &m2);
    // x_k = e_k + u·(f11_k e3 + f12_k e4) + v·(f21_k e3 + f22_k e4): the duals at the origin are
    // e3 and e4, so L1u has coefficients f11, and so on.
    let (u, v) = (Poly::u(), Poly::v());
    let maps: [Vec5; 3] = std::array::from_fn(|k| {
        let mut m: Vec5 = std::array::from_fn(|i| Poly::from_int(i64::from(i == k)));
        m[3] = &u.scale(&f11[k]) + &v.scale(&f21[k]);
        m[4] = &u.scale(&f12[k]) + &v.scale(&f22[k]);
        m
    });
    (PlaneChart::new(maps), [f11.clone(), f21.clone(), f12, f22])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::focal::{pencil_configuration, Eigen, PencilConfig};

    #[test]
    fn deterministic_in_seed() {
        for class in ClassLabel::PAPER_CLASSES {
            let a = generate(&GenSpec::new(class, 17)).unwrap();
            let b = generate(&GenSpec::new(class, 17)).unwrap();
            assert_eq!(a.chart, b.chart, "{class}");
        }
    }

    #[test]
    fn too_small_degree_fails() {
        let spec = GenSpec { degree: 2, ..GenSpec::new(ClassLabel::Gamma2, 1) };
        assert_eq!(generate(&spec).unwrap_err(), Error::GenerationFailed(ClassLabel::Gamma2));
    }

    #[test]
    fn jordan_chart_has_requested_forms() {
        let f11 = [int(1), int(0), int(2)];
        let f21 = [int(0), int(1), int(-1)];
        let a = [[int(1), int(-1)], [int(1), int(3)]];
        let (chart, forms) = jordan_pencil_chart(f11, f21, a);
        let frame = eval_frame(&chart, (&int(0), &int(0))).unwrap();
        let got = characteristic_forms(&frame);
        assert_eq!(got.values(), forms);
        match pencil_configuration(&got).unwrap() {
            PencilConfig::SameBasePoint { eigen, disc, .. } => {
                assert_eq!(eigen, Eigen::Double);
                assert!(disc.is_zero());
            }
            other => panic!("{other:?}"),
        }
    }
}
