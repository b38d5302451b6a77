//! The classification decision tree.
//!
//! Generic values are maxima over seeded samples: ranks and image dimensions can only drop
//! on special base points. Among the samples of maximal conic rank, the generic direction
//! pattern is the least degenerate one.

use num_traits::Zero;

use crate::certificate::{build_certificate, check_samples, Certificate};
use crate::chart::PlaneChart;
use crate::error::{Error, Result};
use crate::focal::{
    characteristic_forms, developable_directions, focal_conic, focal_locus_for_direction, generic_directions,
    universal_focal_point, CharForms, DirectionSet, FocalConic, FocalLocus,
};
use crate::frame::{eval_frame, JetFrame};
use crate::jet::{d_u, d_v, values, Jet2};
use crate::label::ClassLabel;
use crate::lines::{focal_line_jets, focus_jets, lift_direction, line_family_foci, FocalLine};
use crate::proj::image_dim;
use crate::sampling::{validate_with, Sampler, SamplingConfig};
use crate::scalar::{int, Scalar};

/// Everything computed at one base point before any branch-specific work.
#[derive(Debug, Clone)]
pub struct Sample {
    pub base: (Scalar, Scalar),
    pub frame: JetFrame,
    pub forms: CharForms,
    pub conic: FocalConic,
    pub directions: DirectionSet,
}

pub fn sample_at(chart: &PlaneChart, base: (Scalar, Scalar)) -> Result<Sample> {
    let frame = eval_frame(chart, (&base.0, &base.1))?;
    let forms = characteristic_forms(&frame);
    let conic = focal_conic(&forms);
    let directions = developable_directions(&forms);
    Ok(Sample { base, frame, forms, conic, directions })
}

/// Degeneracy order of direction patterns; special points can only move up.
fn pattern_order(d: &DirectionSet) -> u8 {
    match d {
        DirectionSet::Empty => 0,
        DirectionSet::Finite { distinct_roots: 2, .. } => 2,
        DirectionSet::Finite { double: true, .. } => 3,
        DirectionSet::Finite { .. } => 1,
        DirectionSet::All => 4,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

/// The family a (conic rank, direction pattern) pair belongs to, if the table has a row for it.
pub fn branch_of(rank: usize, dirs: &DirectionSet) -> Option<Branch> {
    match (rank, pattern_order(dirs)) {
        (1, 4) => Some(Branch::Delta),
        (2, 1) => Some(Branch::Alpha),
        (2, 2) => Some(Branch::Beta),
        (1, 3) => Some(Branch::Gamma),
        _ => None,
    }
}

/// The universal focal point and the dimension of its image near one sample.
#[derive(Debug, Clone)]
pub struct PointData {
    pub coords: [Jet2; 3],
    pub point: Vec<Jet2>,
    pub image_dim: usize,
}

pub fn point_data(s: &Sample) -> Result<PointData> {
    let coords = universal_focal_point(&s.forms, &s.directions)?;
    let point = s.frame.plane_point(&coords);
    let image_dim = image_dim(&values(&point), &[d_u(&point), d_v(&point)]);
    Ok(PointData { coords, point, image_dim })
}

/// `p_R` for the focal lines, and when it is 3 the focus of the line family with the
/// dimension of its image.
#[derive(Debug, Clone)]
pub struct AlphaData {
    pub line: FocalLine,
    pub p_r: usize,
    pub focus: Option<(Vec<Jet2>, usize)>,
}

fn union_dim(line: &FocalLine) -> usize {
    let (a, b) = (values(&line.a), values(&line.b));
    let (au, av, bu, bv) = (d_u(&line.a), d_v(&line.a), d_u(&line.b), d_v(&line.b));
    // a + t·b at a few t; rank can only drop at special t
    (1..=3)
        .map(|t| {
            let t = int(t);
            let comb = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> { x.iter().zip(y).map(|(p, q)| p + &t * q).collect() };
            image_dim(&comb(&a, &b), &[comb(&au, &bu), comb(&av, &bv), b.clone()])
        })
        .max()
        .expect("nonempty")
}

pub fn alpha_data(s: &Sample) -> Result<AlphaData> {
    let root = match &s.directions {
        DirectionSet::Finite { rational_root: Some(r), distinct_roots: 1, .. } => r.clone(),
        _ => return Err(Error::NotALine),
    };
    let dir = lift_direction(&s.forms, &root)?;
    let line = focal_line_jets(&s.frame, &s.forms, &dir)?;
    let p_r = union_dim(&line);
    let focus = if p_r == 3 {
        let foci = line_family_foci(&line.a, &line.b)?;
        if foci.gcd.degree() != 1 {
            return Err(Error::UnexpectedFocusCount(foci.gcd.degree()));
        }
        let f = focus_jets(&line.a, &line.b, &foci.foci[0].coords)?;
        let dim = image_dim(&values(&f), &[d_u(&f), d_v(&f)]);
        Some((f, dim))
    } else {
        None
    };
    Ok(AlphaData { line, p_r, focus })
}

/// The fixed line of a delta congruence, read off at one sample.
pub fn delta_line(s: &Sample) -> Result<FocalLine> {
    for (l, m) in generic_directions().take(6) {
        if let FocalLocus::Line(_) = focal_locus_for_direction(&s.forms, &l, &m) {
            return focal_line_jets(&s.frame, &s.forms, &(Jet2::constant(l), Jet2::constant(m)));
        }
    }
    Err(Error::NotALine)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionSummary {
    pub kind: &'static str,
    pub gcd_degree: Option<usize>,
    pub double: bool,
    pub root: Option<(Scalar, Scalar)>,
}

impl DirectionSummary {
    pub fn of(d: &DirectionSet) -> Self {
        let root = match d {
            DirectionSet::Finite { rational_root: Some((l, m)), .. } => {
                Some(crate::focal::normalize_direction(l, m))
            }
            _ => None,
        };
        DirectionSummary { kind: d.kind(), gcd_degree: d.gcd_degree(), double: d.is_double(), root }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dims {
    pub sigma_prime: Option<usize>,
    pub p_r: Option<usize>,
    pub p_f1r: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub label: ClassLabel,
    /// Generic rank of the focal conic; absent when the chart was rejected before sampling.
    pub conic_rank: Option<usize>,
    pub directions: Option<DirectionSummary>,
    pub dims: Dims,
    pub certificate: Option<Certificate>,
    pub samples: Vec<(Scalar, Scalar)>,
    pub seed: u64,
    pub resamples: usize,
    pub realization_dim: usize,
}

impl ClassReport {
    /// Whether the label is one of the ten classes with degenerate focal conic.
    pub fn in_scope(&self) -> bool {
        self.label.is_paper_class()
    }
}

/// Draws base points until one yields a sample accepted by `accept`.
struct Collector<'a> {
    chart: &'a PlaneChart,
    sampler: Sampler,
    budget: usize,
    resamples: usize,
    spanning: usize,
}

impl Collector<'_> {
    fn next<T>(&mut self, mut accept: impl FnMut(Sample) -> Result<T>) -> Result<T> {
        loop {
            if self.resamples > self.budget {
                return Err(if self.spanning == 0 { Error::DegenerateChart } else { Error::NonGenericChart(self.resamples) });
            }
            let base = self.sampler.base();
            match sample_at(self.chart, base) {
                Ok(s) => {
                    self.spanning += 1;
                    match accept(s) {
                        Ok(t) => return Ok(t),
                        Err(_) => self.resamples += 1,
                    }
                }
                Err(_) => self.resamples += 1,
            }
        }
    }
}

pub fn classify(chart: &PlaneChart, cfg: &SamplingConfig) -> Result<ClassReport> {
    let mut sampler = Sampler::new(cfg);
    let validation = validate_with(chart, cfg, &mut sampler)?;
    let mut report = ClassReport {
        label: ClassLabel::DegenerateCongruence,
        conic_rank: None,
        directions: None,
        dims: Dims::default(),
        certificate: None,
        samples: Vec::new(),
        seed: cfg.seed,
        resamples: 0,
        realization_dim: validation.realization_dim,
    };
    if !validation.ok {
        return Ok(report);
    }
    let k = cfg.samples.max(1);
    let mut col = Collector { chart, sampler, budget: cfg.budget, resamples: 0, spanning: 0 };

    let mut first: Vec<Sample> = Vec::with_capacity(k);
    for _ in 0..k {
        first.push(col.next(Ok)?);
    }
    let rank = first.iter().map(|s| s.conic.rank).max().expect("k >= 1");
    report.conic_rank = Some(rank);
    let generic = first
        .iter()
        .filter(|s| s.conic.rank == rank)
        .min_by_key(|s| pattern_order(&s.directions))
        .expect("a sample of maximal rank")
        .directions
        .clone();
    report.directions = Some(DirectionSummary::of(&generic));
    let out_of_table = match rank {
        3 => Some(ClassLabel::IrreducibleConic),
        0 => Some(ClassLabel::OutOfScopeFocalPlane),
        _ => None,
    };
    if let Some(label) = out_of_table {
        report.label = label;
        report.samples = first.into_iter().map(|s| s.base).collect();
        report.resamples = col.resamples;
        return Ok(report);
    }
    let branch = branch_of(rank, &generic).ok_or(Error::InconsistentSample)?;
    let matches = |s: &Sample| s.conic.rank == rank && pattern_order(&s.directions) == pattern_order(&generic);

    // Keep the generic samples in order, replacing the others with fresh draws.
    let mut pool: Vec<Sample> = Vec::with_capacity(k);
    for s in first {
        if matches(&s) {
            pool.push(s);
        } else {
            col.resamples += 1;
        }
    }

    macro_rules! collect {
        ($analyze:expr) => {{
            let mut out = Vec::with_capacity(k);
            for s in pool {
                match $analyze(&s) {
                    Ok(d) => out.push((s, d)),
                    Err(_) => col.resamples += 1,
                }
            }
            while out.len() < k {
                let next = col.next(|s| {
                    if !matches(&s) {
                        return Err(Error::NonGenericSample);
                    }
                    let d = $analyze(&s)?;
                    Ok((s, d))
                })?;
                out.push(next);
            }
            out
        }};
    }

    let (label, samples): (ClassLabel, Vec<Sample>) = match branch {
        Branch::Delta => {
            let data = collect!(|s: &Sample| delta_line(s));
            (ClassLabel::Delta, data.into_iter().map(|(s, _)| s).collect())
        }
        Branch::Beta | Branch::Gamma => {
            let data = collect!(point_data);
            let dim = data.iter().map(|(_, d)| d.image_dim).max().expect("k >= 1");
            report.dims.sigma_prime = Some(dim);
            use ClassLabel::*;
            let label = match (branch, dim) {
                (Branch::Beta, 2) => Beta1,
                (Branch::Beta, 1) => Beta2,
                (Branch::Beta, _) => Beta3,
                (_, 2) => Gamma1,
                (_, 1) => Gamma2,
                _ => Gamma3,
            };
            (label, data.into_iter().map(|(s, _)| s).collect())
        }
        Branch::Alpha => {
            let data = collect!(alpha_data);
            let p_r = data.iter().map(|(_, d)| d.p_r).max().expect("k >= 1");
            report.dims.p_r = Some(p_r);
            let label = if p_r == 3 {
                let p_f1r = data.iter().filter_map(|(_, d)| d.focus.as_ref().map(|f| f.1)).max().unwrap_or(0);
                report.dims.p_f1r = Some(p_f1r);
                match p_f1r {
                    2 => ClassLabel::Alpha1,
                    1 => ClassLabel::Alpha2,
                    d => return Err(Error::UnexpectedFocusDim(d)),
                }
            } else {
                ClassLabel::Alpha3
            };
            (label, data.into_iter().map(|(s, _)| s).collect())
        }
    };
    report.label = label;
    report.samples = samples.iter().map(|s| s.base.clone()).collect();
    report.resamples = col.resamples;
    report.certificate = Some(build_certificate(label, &samples[0])?);
    for check in check_samples(&report, &samples)? {
        if !check.ok {
            return Err(Error::CertificateFailed(check.name.to_string()));
        }
    }
    Ok(report)
}

/// `dim Σ'` over the given base points.
pub fn dim_sigma_prime(chart: &PlaneChart, bases: &[(Scalar, Scalar)]) -> Result<usize> {
    let mut best = None;
    for b in bases {
        let d = point_data(&sample_at(chart, b.clone())?)?.image_dim;
        best = Some(best.map_or(d, |x: usize| x.max(d)));
    }
    best.ok_or(Error::NotAPoint)
}

/// `(p_R, p_F1R)` over the given base points.
pub fn alpha_dims(chart: &PlaneChart, bases: &[(Scalar, Scalar)]) -> Result<(usize, Option<usize>)> {
    let data: Vec<AlphaData> =
        bases.iter().map(|b| sample_at(chart, b.clone()).and_then(|s| alpha_data(&s))).collect::<Result<_>>()?;
    let p_r = data.iter().map(|d| d.p_r).max().ok_or(Error::NotALine)?;
    let p_f1r = (p_r == 3).then(|| data.iter().filter_map(|d| d.focus.as_ref().map(|f| f.1)).max().unwrap_or(0));
    if p_f1r == Some(0) {
        return Err(Error::UnexpectedFocusDim(0));
    }
    Ok((p_r, p_f1r))
}

/// Whether the conic kills the constant part of the universal focal point.
pub fn singular_point_identity(s: &Sample, p: &PointData) -> bool {
    let p0: [Scalar; 3] = p.coords.clone().map(|j| j.value().clone());
    s.conic.apply(&p0).iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::parse_chart;

    fn run(text: &str) -> ClassReport {
        classify(&parse_chart(text).unwrap(), &SamplingConfig::with_seed(3)).unwrap()
    }

    #[test]
    fn delta_chart() {
        let r = run("vars: u v\npoint: [1,0,0,0,0]\npoint: [0,1,0,0,0]\npoint: [0,0,1,u,v]\n");
        assert_eq!(r.label, ClassLabel::Delta);
        assert_eq!(r.conic_rank, Some(1));
        match r.certificate.unwrap() {
            Certificate::Delta { fixed_line } => {
                let expect = crate::proj::ProjLine::through(&[1, 0, 0, 0, 0].map(int), &[0, 1, 0, 0, 0].map(int));
                assert_eq!(Some(fixed_line), expect);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn translation_surface_chart() {
        let r = run("vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n");
        assert_eq!(r.label, ClassLabel::Beta1);
        assert_eq!(r.dims.sigma_prime, Some(2));
        assert_eq!(r.samples.len(), 5);
    }

    #[test]
    fn cone_over_hyperbolic_congruence() {
        let r = run("vars: u v\npoint: [0,0,0,0,1]\npoint: [1,u,0,0,0]\npoint: [0,0,1,v,0]\n");
        assert_eq!(r.label, ClassLabel::Beta3);
        match r.certificate.unwrap() {
            Certificate::Vertex { vertex, per_line_focus_count, .. } => {
                assert_eq!(vertex, crate::proj::ProjPoint::from_ints([0, 0, 0, 0, 1]));
                assert_eq!(per_line_focus_count, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn planes_in_a_hyperplane() {
        let r = run("vars: u v\npoint: [1, u, u^2, v, 0]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 0]\n");
        assert_eq!(r.label, ClassLabel::DegenerateCongruence);
        assert!(r.realization_dim <= 3);
    }

    #[test]
    fn table_rows() {
        let fin = |distinct_roots, double| DirectionSet::Finite {
            gcd: crate::binform::BinaryForm::from_ints(&[1, 0]),
            distinct_roots,
            double,
            rational_root: None,
        };
        assert_eq!(branch_of(2, &fin(1, false)), Some(Branch::Alpha));
        assert_eq!(branch_of(2, &fin(2, false)), Some(Branch::Beta));
        assert_eq!(branch_of(1, &fin(1, true)), Some(Branch::Gamma));
        assert_eq!(branch_of(1, &DirectionSet::All), Some(Branch::Delta));
        assert_eq!(branch_of(2, &fin(1, true)), None);
        assert_eq!(branch_of(1, &fin(2, false)), None);
    }
}
