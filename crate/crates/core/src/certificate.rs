//! Geometric witnesses for each class, and their re-verification from the chart alone.

use num_traits::Zero;

use crate::binform::{binform_gcd, BinaryForm, FormGcd};
use crate::chart::PlaneChart;
use crate::classify::{alpha_data, delta_line, point_data, sample_at, singular_point_identity, ClassReport, PointData, Sample};
use crate::error::{Error, Result};
use crate::jet::{d_u, d_uu, d_uv, d_v, d_vv, values};
use crate::label::ClassLabel;
use crate::linalg::{jet_nullspace, mat_nullspace, transpose};
use crate::lines::{line_family_foci, FocalLine, LineFoci};
use crate::proj::{span_rank, ProjLine, ProjPoint};
use crate::scalar::{dot, int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Every plane contains `fixed_line`.
    Delta { fixed_line: ProjLine },
    /// The planes are tangent planes of the surface traced by the universal focal point.
    /// `asymptotic_count` is the number of common asymptotic directions of the surface;
    /// `conjugate_distinct` says whether the conjugate directions are distinct.
    SurfaceTangent { surface_point: ProjPoint, tangent_ok: bool, asymptotic_count: usize, conjugate_distinct: bool },
    /// The planes pass through the tangent lines of the curve traced by the universal
    /// focal point.
    CurveTangent { curve_point: ProjPoint, tangent_line: ProjLine, osculating_contained: bool },
    /// The planes join a fixed vertex to the lines of a line congruence in a hyperplane
    /// `X_k = 0`.
    Vertex { vertex: ProjPoint, hyperplane: usize, per_line_focus_count: usize, focus_multiplicity: usize },
    Alpha1 { focal_line: ProjLine, focus: ProjPoint, focus_image_dim: usize },
    Alpha2 { focal_line: ProjLine, vertex: ProjPoint, vertex_curve_dim: usize },
    Alpha3 { focal_line: ProjLine, ruled_surface_dim: usize },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Delta { .. } => "fixed_line",
            Certificate::SurfaceTangent { .. } => "surface_tangent",
            Certificate::CurveTangent { .. } => "curve_tangent",
            Certificate::Vertex { .. } => "vertex",
            Certificate::Alpha1 { .. } => "osculating_family",
            Certificate::Alpha2 { .. } => "cone_family",
            Certificate::Alpha3 { .. } => "ruled_surface",
        }
    }
}

fn point_of(v: &[Scalar]) -> ProjPoint {
    ProjPoint::new(v).expect("nonzero point")
}

fn plane_rows(s: &Sample) -> Vec<Vec<Scalar>> {
    s.frame.point_values()
}

/// Second fundamental forms of the surface traced by `p`, one per normal hyperplane, as
/// quadratic forms in `(du, dv)`.
fn second_fundamental_forms(p: &PointData) -> Vec<BinaryForm> {
    let (p0, pu, pv) = (values(&p.point), d_u(&p.point), d_v(&p.point));
    let (puu, puv, pvv) = (d_uu(&p.point), d_uv(&p.point), d_vv(&p.point));
    mat_nullspace(&[p0, pu, pv])
        .iter()
        .map(|n| BinaryForm::new(vec![dot(n, &puu), int(2) * dot(n, &puv), dot(n, &pvv)]))
        .collect()
}

/// Jacobian of two binary quadratics: its roots are the directions conjugate to themselves
/// with respect to the pencil.
fn jacobian(f: &BinaryForm, g: &BinaryForm) -> BinaryForm {
    let c = |h: &BinaryForm, i: usize| h.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
    let (a1, b1, c1) = (c(f, 0), c(f, 1), c(f, 2));
    let (a2, b2, c2) = (c(g, 0), c(g, 1), c(g, 2));
    // (2a1 λ + b1 μ)(b2 λ + 2c2 μ) - (b1 λ + 2c1 μ)(2a2 λ + b2 μ)
    let two = int(2);
    BinaryForm::new(vec![
        &two * &a1 * &b2 - &two * &b1 * &a2,
        int(4) * (&a1 * &c2 - &c1 * &a2),
        &two * &b1 * &c2 - &two * &c1 * &b2,
    ])
}

pub struct SurfaceWitness {
    pub tangent_ok: bool,
    pub asymptotic_count: usize,
    pub conjugate_distinct: bool,
}

pub fn surface_witness(s: &Sample, p: &PointData) -> SurfaceWitness {
    let mut rows = plane_rows(s);
    rows.extend([values(&p.point), d_u(&p.point), d_v(&p.point)]);
    let tangent_ok = p.image_dim == 2 && span_rank(&rows) == 3;
    let forms = second_fundamental_forms(p);
    let asymptotic_count = match binform_gcd(&forms) {
        FormGcd::AllOfP1 => 2,
        FormGcd::Form(g) => g.degree(),
    };
    let conjugate_distinct = match forms.as_slice() {
        [f, g] => {
            let j = jacobian(f, g);
            j.degree() == 2 && !j.discriminant().map(|d| d.is_zero()).unwrap_or(true)
        }
        _ => false,
    };
    SurfaceWitness { tangent_ok, asymptotic_count, conjugate_distinct }
}

pub struct CurveWitness {
    pub tangent_line: ProjLine,
    pub tangent_ok: bool,
    pub osculating_contained: bool,
}

pub fn curve_witness(s: &Sample, p: &PointData) -> Result<CurveWitness> {
    let (p0, pu, pv) = (values(&p.point), d_u(&p.point), d_v(&p.point));
    // fiber direction w: w1·P_u + w2·P_v is a multiple of P
    let kernel = mat_nullspace(&transpose(&[pu.clone(), pv.clone(), p0.clone()]));
    let w = kernel.iter().find(|k| !(k[0].is_zero() && k[1].is_zero())).ok_or(Error::NotAPoint)?;
    let (w1, w2) = (w[0].clone(), w[1].clone());
    // a transverse direction d moves along the curve
    let (d1, d2) = if w2.is_zero() { (int(0), int(1)) } else { (int(1), int(0)) };
    let along = |x: &[Scalar], y: &[Scalar], a: &Scalar, b: &Scalar| -> Vec<Scalar> {
        x.iter().zip(y).map(|(p, q)| a * p + b * q).collect()
    };
    let pd = along(&pu, &pv, &d1, &d2);
    let tangent_line = ProjLine::through(&p0, &pd).ok_or(Error::NotALine)?;
    let mut rows = plane_rows(s);
    rows.push(p0.clone());
    rows.push(pd.clone());
    let tangent_ok = p.image_dim == 1 && span_rank(&rows) == 3;
    let (puu, puv, pvv) = (d_uu(&p.point), d_uv(&p.point), d_vv(&p.point));
    let pdd: Vec<Scalar> =
        (0..5).map(|k| &d1 * &d1 * &puu[k] + int(2) * &d1 * &d2 * &puv[k] + &d2 * &d2 * &pvv[k]).collect();
    // the planes through the tangent line at this curve point sweep span[x, y, z, x_w, y_w, z_w]
    let mut sweep = plane_rows(s);
    for i in 0..3 {
        sweep.push(along(&values(&s.frame.points_u[i]), &values(&s.frame.points_v[i]), &w1, &w2));
    }
    let swept = span_rank(&sweep);
    sweep.push(pdd);
    let osculating_contained = swept == 4 && span_rank(&sweep) == 4;
    Ok(CurveWitness { tangent_line, tangent_ok, osculating_contained })
}

/// The line family cut on a hyperplane avoiding the vertex, and its foci.
pub fn vertex_witness(s: &Sample, p: &PointData) -> Result<(usize, LineFoci)> {
    let p0 = values(&p.point);
    let k = (0..5).rev().find(|&k| !p0[k].is_zero()).ok_or(Error::NotAPoint)?;
    let row: Vec<_> = s.frame.points.iter().map(|x| x[k].clone()).collect();
    let [a, b]: [Vec<_>; 2] = jet_nullspace(&[row])?.try_into().map_err(|_| Error::NotALine)?;
    let line = FocalLine { a: s.frame.plane_point(&a), b: s.frame.plane_point(&b) };
    Ok((k, line_family_foci(&line.a, &line.b)?))
}

/// Builds the certificate of `label` from one generic sample.
pub fn build_certificate(label: ClassLabel, s: &Sample) -> Result<Certificate> {
    use ClassLabel::*;
    Ok(match label {
        Delta => Certificate::Delta { fixed_line: delta_line(s)?.line() },
        Beta1 | Gamma1 => {
            let p = point_data(s)?;
            let w = surface_witness(s, &p);
            Certificate::SurfaceTangent {
                surface_point: point_of(&values(&p.point)),
                tangent_ok: w.tangent_ok,
                asymptotic_count: w.asymptotic_count,
                conjugate_distinct: w.conjugate_distinct,
            }
        }
        Beta2 | Gamma2 => {
            let p = point_data(s)?;
            let w = curve_witness(s, &p)?;
            Certificate::CurveTangent {
                curve_point: point_of(&values(&p.point)),
                tangent_line: w.tangent_line,
                osculating_contained: w.osculating_contained,
            }
        }
        Beta3 | Gamma3 => {
            let p = point_data(s)?;
            let (hyperplane, foci) = vertex_witness(s, &p)?;
            Certificate::Vertex {
                vertex: point_of(&values(&p.point)),
                hyperplane,
                per_line_focus_count: foci.count,
                focus_multiplicity: foci.gcd.degree() + 1 - foci.count,
            }
        }
        Alpha1 | Alpha2 | Alpha3 => {
            let a = alpha_data(s)?;
            let focal_line = a.line.line();
            match (label, a.focus) {
                (Alpha3, _) => Certificate::Alpha3 { focal_line, ruled_surface_dim: a.p_r - 1 },
                (Alpha1, Some((f, dim))) => Certificate::Alpha1 { focal_line, focus: point_of(&values(&f)), focus_image_dim: dim },
                (Alpha2, Some((f, dim))) => Certificate::Alpha2 { focal_line, vertex: point_of(&values(&f)), vertex_curve_dim: dim },
                _ => return Err(Error::CertificateFailed("focus".into())),
            }
        }
        IrreducibleConic | OutOfScopeFocalPlane | DegenerateCongruence => {
            return Err(Error::CertificateFailed("no certificate for this label".into()))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub ok: bool,
}

fn check(name: &'static str, ok: bool) -> Check {
    Check { name, ok }
}

/// Re-derives the report's certificate from the chart at the report's sample points.
pub fn certificate_check(chart: &PlaneChart, report: &ClassReport) -> Result<Vec<Check>> {
    if report.certificate.is_none() {
        return Ok(Vec::new());
    }
    let samples: Vec<Sample> = report.samples.iter().map(|b| sample_at(chart, b.clone())).collect::<Result<_>>()?;
    check_samples(report, &samples)
}

/// Runs the certificate checks against already computed samples at the report's points.
pub fn check_samples(report: &ClassReport, samples: &[Sample]) -> Result<Vec<Check>> {
    use ClassLabel::*;
    let Some(cert) = &report.certificate else {
        return Ok(Vec::new());
    };
    let first = samples.first().ok_or(Error::NonGenericSample)?;
    let label = report.label;
    let mut out = vec![check("reproduced", build_certificate(label, first).as_ref() == Ok(cert))];
    match label {
        Delta => {
            let lines: Vec<FocalLine> = samples.iter().map(delta_line).collect::<Result<_>>()?;
            let Certificate::Delta { fixed_line } = cert else { unreachable!() };
            out.push(check("conic_rank_one", samples.iter().all(|s| s.conic.rank == 1)));
            out.push(check("fixed_line", lines.iter().all(|l| &l.line() == fixed_line)));
            out.push(check("line_stationary", lines.iter().all(|l| l.motion_rank() == 2)));
        }
        Beta1 | Gamma1 | Beta2 | Gamma2 | Beta3 | Gamma3 => {
            let points: Vec<PointData> = samples.iter().map(point_data).collect::<Result<_>>()?;
            out.push(check(
                "singular_point",
                samples.iter().zip(&points).all(|(s, p)| singular_point_identity(s, p)),
            ));
            match label {
                Beta1 | Gamma1 => {
                    let w: Vec<SurfaceWitness> = samples.iter().zip(&points).map(|(s, p)| surface_witness(s, p)).collect();
                    let beta = label == Beta1;
                    out.push(check("tangent_plane", w.iter().all(|x| x.tangent_ok)));
                    out.push(check("asymptotic_count", w.iter().all(|x| x.asymptotic_count == usize::from(!beta))));
                    out.push(check("conjugate_directions", w.iter().all(|x| x.conjugate_distinct == beta)));
                }
                Beta2 | Gamma2 => {
                    let w: Vec<CurveWitness> =
                        samples.iter().zip(&points).map(|(s, p)| curve_witness(s, p)).collect::<Result<_>>()?;
                    out.push(check("tangent_line_in_plane", w.iter().all(|x| x.tangent_ok)));
                    out.push(check(
                        "osculating_plane",
                        w.iter().all(|x| x.osculating_contained == (label == Gamma2)),
                    ));
                }
                _ => {
                    let Certificate::Vertex { vertex, .. } = cert else { unreachable!() };
                    let want = if label == Beta3 { 2 } else { 1 };
                    out.push(check("vertex_fixed", points.iter().all(|p| &point_of(&values(&p.point)) == vertex && p.image_dim == 0)));
                    let counts: Vec<usize> = samples
                        .iter()
                        .zip(&points)
                        .map(|(s, p)| vertex_witness(s, p).map(|(_, f)| f.count))
                        .collect::<Result<_>>()?;
                    out.push(check("focus_count", counts.iter().all(|&c| c == want)));
                }
            }
        }
        Alpha1 | Alpha2 | Alpha3 => {
            let data: Vec<_> = samples.iter().map(alpha_data).collect::<Result<_>>()?;
            out.push(check(
                "focal_line_in_plane",
                samples.iter().zip(&data).all(|(s, a)| {
                    let mut rows = plane_rows(s);
                    rows.extend([values(&a.line.a), values(&a.line.b)]);
                    span_rank(&rows) == 3
                }),
            ));
            let p_r = data.iter().map(|a| a.p_r).max().ok_or(Error::NotALine)?;
            let p_f1r = (p_r == 3).then(|| data.iter().filter_map(|a| a.focus.as_ref().map(|f| f.1)).max().unwrap_or(0));
            out.push(check("p_R", Some(p_r) == report.dims.p_r));
            out.push(check("p_F1R", p_f1r == report.dims.p_f1r));
        }
        IrreducibleConic | OutOfScopeFocalPlane | DegenerateCongruence => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobian_of_coordinate_squares() {
        // J(λ², μ²) = 2λ·2μ = 4λμ: distinct roots
        let j = jacobian(&BinaryForm::from_ints(&[1, 0, 0]), &BinaryForm::from_ints(&[0, 0, 1]));
        assert_eq!(j, BinaryForm::from_ints(&[0, 4, 0]));
        // J(λμ, μ²) = μ·2μ - λ·0 = 2μ²: double root at the shared direction
        let j = jacobian(&BinaryForm::from_ints(&[0, 1, 0]), &BinaryForm::from_ints(&[0, 0, 1]));
        assert_eq!(j, BinaryForm::from_ints(&[0, 0, 2]));
    }
}
