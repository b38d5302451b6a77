//! One-parameter plane families whose focal locus is a line: the three kinds of
//! developable families.

use crate::chart::PlaneChart;
use crate::error::{Error, Result};
use crate::focal::characteristic_forms;
use crate::frame::eval_frame;
use crate::jet::{d_u, values, Jet2};
use crate::lines::{curve_family_focus, focal_line_jets, FocalLine};
use crate::linalg::mat_rank;
use crate::proj::{image_dim, ProjLine, ProjPoint};
use crate::sampling::{Sampler, SamplingConfig};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DevelopableKind {
    NotDevelopable,
    /// Every plane contains this line.
    ThroughLine(ProjLine),
    /// Tangent planes of a cone with this vertex.
    ConeTangent(ProjPoint),
    /// Osculating planes of a curve.
    CurveOsculating,
}

struct CurveSample {
    line: FocalLine,
    line_dim: usize,
    focus: Option<(Vec<Scalar>, usize)>,
}

fn sample(chart: &PlaneChart, t0: &Scalar, s0: &Scalar) -> Result<Option<CurveSample>> {
    let frame = eval_frame(chart, (t0, &int(0)))?;
    let forms = characteristic_forms(&frame);
    let [l1u, _, l2u, _] = forms.values();
    match mat_rank(&[l1u.to_vec(), l2u.to_vec()]) {
        2 => return Ok(None),
        0 => return Err(Error::NonGenericSample),
        _ => {}
    }
    let line = focal_line_jets(&frame, &forms, &(Jet2::one(), Jet2::zero()))?;
    let (a0, b0) = (values(&line.a), values(&line.b));
    let (at, bt) = (d_u(&line.a), d_u(&line.b));
    let point: Vec<Scalar> = a0.iter().zip(&b0).map(|(a, b)| a + s0 * b).collect();
    let moved: Vec<Scalar> = at.iter().zip(&bt).map(|(a, b)| a + s0 * b).collect();
    let line_dim = image_dim(&point, &[moved, b0]);
    let focus = if line_dim == 1 {
        None
    } else {
        let p = curve_family_focus(&line.a, &line.b)?;
        let dim = image_dim(&values(&p), &[d_u(&p)]);
        Some((values(&p), dim))
    };
    Ok(Some(CurveSample { line, line_dim, focus }))
}

/// Classifies a plane family depending on `u` only.
pub fn classify_1dim_developable(chart: &PlaneChart, cfg: &SamplingConfig) -> Result<DevelopableKind> {
    if chart.depends_on_v() {
        return Err(Error::NotOneParameter);
    }
    let mut sampler = Sampler::new(cfg);
    let mut good: Vec<CurveSample> = Vec::new();
    let mut attempts = 0;
    while good.len() < cfg.samples {
        if attempts >= cfg.samples + cfg.budget {
            if good.is_empty() {
                return Err(Error::NonGenericChart(attempts));
            }
            break;
        }
        attempts += 1;
        let (t0, s0) = (sampler.scalar(), sampler.scalar());
        match sample(chart, &t0, &s0) {
            Ok(None) => return Ok(DevelopableKind::NotDevelopable),
            Ok(Some(s)) => good.push(s),
            Err(_) => continue,
        }
    }
    let line_dim = good.iter().map(|s| s.line_dim).max().expect("at least one sample");
    if line_dim == 1 {
        return Ok(DevelopableKind::ThroughLine(good[0].line.line()));
    }
    let focus_dim = good.iter().filter_map(|s| s.focus.as_ref().map(|f| f.1)).max().unwrap_or(0);
    if focus_dim == 0 {
        let vertex = good.iter().find_map(|s| s.focus.as_ref()).expect("focus computed");
        Ok(DevelopableKind::ConeTangent(ProjPoint::new(&vertex.0).expect("nonzero focus")))
    } else {
        Ok(DevelopableKind::CurveOsculating)
    }
}
