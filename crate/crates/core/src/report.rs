//! Deterministic JSON and plain-text renderings of classification results.
//!
//! Rationals are always written as `"p/q"` (or `"p"`) strings. Objects are built from
//! `serde_json::Map`, which keeps keys sorted, so equal reports give equal bytes.

use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::chart::PlaneChart;
use crate::classify::{sample_at, ClassReport, DirectionSummary};
use crate::error::Result;
use crate::focal::{focal_locus_for_direction, normalize_direction, pencil_configuration, DirectionSet, FocalLocus, PencilConfig};
use crate::scalar::{fmt_scalar, Scalar};

fn s(x: &Scalar) -> Value {
    Value::String(fmt_scalar(x))
}

fn vec_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn pair(p: &(Scalar, Scalar)) -> Value {
    json!([s(&p.0), s(&p.1)])
}

fn directions_json(d: &DirectionSummary) -> Value {
    json!({
        "kind": d.kind,
        "gcd_degree": d.gcd_degree,
        "double": d.double,
        "root": d.root.as_ref().map(pair),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    let mut v = match c {
        Certificate::Delta { fixed_line } => json!({ "fixed_line": fixed_line }),
        Certificate::SurfaceTangent { surface_point, tangent_ok, asymptotic_count, conjugate_distinct } => json!({
            "surface_point": surface_point,
            "tangent_ok": tangent_ok,
            "asymptotic_count": asymptotic_count,
            "conjugate_distinct": conjugate_distinct,
        }),
        Certificate::CurveTangent { curve_point, tangent_line, osculating_contained } => json!({
            "curve_point": curve_point,
            "tangent_line": tangent_line,
            "osculating_contained": osculating_contained,
        }),
        Certificate::Vertex { vertex, hyperplane, per_line_focus_count, focus_multiplicity } => json!({
            "vertex": vertex,
            "hyperplane": hyperplane,
            "per_line_focus_count": per_line_focus_count,
            "focus_multiplicity": focus_multiplicity,
        }),
        Certificate::Alpha1 { focal_line, focus, focus_image_dim } => json!({
            "focal_line": focal_line,
            "focus": focus,
            "focus_image_dim": focus_image_dim,
        }),
        Certificate::Alpha2 { focal_line, vertex, vertex_curve_dim } => json!({
            "focal_line": focal_line,
            "vertex": vertex,
            "vertex_curve_dim": vertex_curve_dim,
        }),
        Certificate::Alpha3 { focal_line, ruled_surface_dim } => json!({
            "focal_line": focal_line,
            "ruled_surface_dim": ruled_surface_dim,
        }),
    };
    v.as_object_mut().expect("object").insert("kind".into(), c.kind().into());
    v
}

pub fn report_json(r: &ClassReport) -> Value {
    json!({
        "label": r.label,
        "conic_rank": r.conic_rank,
        "directions": r.directions.as_ref().map(directions_json),
        "dims": {
            "sigma_prime": r.dims.sigma_prime,
            "p_R": r.dims.p_r,
            "p_F1R": r.dims.p_f1r,
        },
        "certificate": r.certificate.as_ref().map(certificate_json),
        "samples": r.samples.iter().map(pair).collect::<Vec<_>>(),
        "seed": r.seed,
        "resamples": r.resamples,
    })
}

/// One-line JSON, the canonical byte form.
pub fn report_to_string(r: &ClassReport) -> String {
    report_json(r).to_string()
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |d| d.to_string())
}

/// Human-readable summary mirroring a row of the classification table.
pub fn report_text(r: &ClassReport) -> String {
    let mut out = String::new();
    let dirs = r.directions.as_ref().map_or_else(
        || "-".to_string(),
        |d| match (&d.root, d.kind) {
            (_, "all") => "all".into(),
            (Some((l, m)), _) => format!("{} (gcd degree {}, root ({}:{}))", d.kind, opt(d.gcd_degree), l, m),
            _ => format!("{} (gcd degree {})", d.kind, opt(d.gcd_degree)),
        },
    );
    out += &format!("label          {}\n", r.label);
    out += &format!("conic rank     {}\n", opt(r.conic_rank));
    out += &format!("directions     {dirs}\n");
    out += &format!("sigma'         {}\n", opt(r.dims.sigma_prime));
    out += &format!("p(R)           {}\n", opt(r.dims.p_r));
    out += &format!("p(F1R)         {}\n", opt(r.dims.p_f1r));
    if let Some(c) = &r.certificate {
        out += &format!("certificate    {} {}\n", c.kind(), certificate_json(c));
    }
    let samples: Vec<String> = r.samples.iter().map(|(u, v)| format!("({u}, {v})")).collect();
    out += &format!("samples        {}\n", samples.join(" "));
    out += &format!("seed           {}  resamples {}\n", r.seed, r.resamples);
    out
}

/// Focal data at one base point.
#[derive(Debug, Clone)]
pub struct ConicSnapshot {
    pub base: (Scalar, Scalar),
    pub matrix: [[Scalar; 3]; 3],
    pub rank: usize,
    pub directions: DirectionSet,
    /// Focal locus for each rational developable direction, normalized `(r:1)` or `(1:0)`.
    pub loci: Vec<((Scalar, Scalar), FocalLocus)>,
    /// `None` when one pencil vanishes identically.
    pub pencil: Option<PencilConfig>,
}

pub fn conic_snapshot(chart: &PlaneChart, base: (Scalar, Scalar)) -> Result<ConicSnapshot> {
    let sample = sample_at(chart, base)?;
    let loci = match &sample.directions {
        DirectionSet::Finite { gcd, .. } => gcd
            .rational_roots()
            .into_iter()
            .map(|((l, m), _)| (normalize_direction(&l, &m), focal_locus_for_direction(&sample.forms, &l, &m)))
            .collect(),
        _ => Vec::new(),
    };
    Ok(ConicSnapshot {
        base: sample.base,
        matrix: sample.conic.matrix.clone(),
        rank: sample.conic.rank,
        directions: sample.directions,
        loci,
        pencil: pencil_configuration(&sample.forms).ok(),
    })
}

fn locus_json(l: &FocalLocus) -> Value {
    match l {
        FocalLocus::Point(q) => json!({ "point": vec_json(q) }),
        FocalLocus::Line(f) => json!({ "line": vec_json(f) }),
        FocalLocus::WholePlane => json!("plane"),
    }
}

fn pencil_json(p: &PencilConfig) -> Value {
    match p {
        PencilConfig::OneDegenerate { pencil } => json!({ "config": p.name(), "pencil": pencil }),
        PencilConfig::SameBasePoint { eigen, matrix, disc } => json!({
            "config": p.name(),
            "eigen": format!("{eigen:?}"),
            "matrix": matrix.iter().map(|r| vec_json(r)).collect::<Vec<_>>(),
            "disc": s(disc),
        }),
        _ => json!({ "config": p.name() }),
    }
}

pub fn snapshot_json(c: &ConicSnapshot) -> Value {
    json!({
        "base": pair(&c.base),
        "matrix": c.matrix.iter().map(|r| vec_json(r)).collect::<Vec<_>>(),
        "rank": c.rank,
        "directions": directions_json(&DirectionSummary::of(&c.directions)),
        "loci": c.loci.iter().map(|(d, l)| json!({ "direction": pair(d), "locus": locus_json(l) })).collect::<Vec<_>>(),
        "pencil": c.pencil.as_ref().map(pencil_json),
    })
}

pub fn snapshot_text(c: &ConicSnapshot) -> String {
    let mut out = format!("base           ({}, {})\nconic matrix\n", c.base.0, c.base.1);
    for row in &c.matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>8}", fmt_scalar(x))).collect();
        out += &format!("  {}\n", cells.join(" "));
    }
    out += &format!("rank           {}\n", c.rank);
    let dirs = match &c.directions {
        DirectionSet::Empty => "none".to_string(),
        DirectionSet::All => "all".to_string(),
        DirectionSet::Finite { gcd, .. } if c.loci.is_empty() => format!("irrational roots of degree {}", gcd.degree()),
        DirectionSet::Finite { .. } => {
            c.loci.iter().map(|((l, m), _)| format!("({l}:{m})")).collect::<Vec<_>>().join(", ")
        }
    };
    out += &format!("directions     {dirs}\n");
    for ((l, m), locus) in &c.loci {
        out += &format!("  locus ({l}:{m})  {}\n", locus_json(locus));
    }
    match &c.pencil {
        Some(p) => out += &format!("pencils        {}\n", pencil_json(p)),
        None => out += "pencils        a pencil vanishes\n",
    }
    out
}
