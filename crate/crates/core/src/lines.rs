//! Focal lines along developable directions, and foci of two-parameter line families.

use num_traits::Zero;

use crate::binform::{binform_gcd, BinaryForm, FormGcd, JetBinaryForm};
use crate::error::{Error, Result};
use crate::focal::{jet_direction_minors, jet_lin_mul, CharForms};
use crate::frame::JetFrame;
use crate::jet::{d_u, d_v, jet_dot, partial_u_vec, partial_v_vec, values, Jet2};
use crate::linalg::{constant_part, jet_nullspace, mat_nullspace, mat_rank};
use crate::proj::{span_rank, ProjLine, ProjPoint};
use crate::scalar::{dot, normalize_first, Scalar};

/// Follows a rational developable direction as the base point moves, using a minor of the
/// direction matrix in which that direction is a simple root.
pub fn lift_direction(forms: &CharForms, root: &(Scalar, Scalar)) -> Result<(Jet2, Jet2)> {
    for minor in jet_direction_minors(forms) {
        let c = minor.constant_part();
        if c.is_zero() || !c.eval(&root.0, &root.1).is_zero() {
            continue;
        }
        if let Ok(dir) = minor.lift_simple_root(root) {
            return Ok(dir);
        }
    }
    Err(Error::MultipleRoot)
}

/// A line of P4 spanned by two jet points.
#[derive(Debug, Clone, PartialEq)]
pub struct FocalLine {
    pub a: Vec<Jet2>,
    pub b: Vec<Jet2>,
}

impl FocalLine {
    pub fn line(&self) -> ProjLine {
        ProjLine::through(&values(&self.a), &values(&self.b)).expect("focal line points are independent")
    }

    /// Rank of the line together with its first derivatives; 2 means the line is stationary.
    pub fn motion_rank(&self) -> usize {
        span_rank(&[values(&self.a), values(&self.b), d_u(&self.a), d_v(&self.a), d_u(&self.b), d_v(&self.b)])
    }
}

/// The focal line of the direction `dir`, with jet entries.
pub fn focal_line_jets(frame: &JetFrame, forms: &CharForms, dir: &(Jet2, Jet2)) -> Result<FocalLine> {
    let rows = forms.jet_rows_at(&dir.0, &dir.1);
    if mat_rank(&constant_part(&rows)) != 1 {
        return Err(Error::NotALine);
    }
    let kernel = jet_nullspace(&rows)?;
    let [ka, kb]: [Vec<Jet2>; 2] = kernel.try_into().map_err(|_| Error::NotALine)?;
    Ok(FocalLine { a: frame.plane_point(&ka), b: frame.plane_point(&kb) })
}

fn check_line(a: &[Jet2], b: &[Jet2]) -> Result<()> {
    if span_rank(&[values(a), values(b)]) != 2 {
        return Err(Error::NotALine);
    }
    Ok(())
}

/// Minors of the 3×2 matrix `[M_i·q_u, M_i·q_v]`, `q = s·a + t·b`, as quadratic forms in
/// `(s, t)`; `M_i` is a jet basis of the hyperplanes through the line.
fn jet_focus_minors(a: &[Jet2], b: &[Jet2]) -> Result<[JetBinaryForm; 3]> {
    let m = jet_nullspace(&[a.to_vec(), b.to_vec()])?;
    let (au, av, bu, bv) = (partial_u_vec(a), partial_v_vec(a), partial_u_vec(b), partial_v_vec(b));
    let eu: Vec<[Jet2; 2]> = m.iter().map(|mi| [jet_dot(mi, &au), jet_dot(mi, &bu)]).collect();
    let ev: Vec<[Jet2; 2]> = m.iter().map(|mi| [jet_dot(mi, &av), jet_dot(mi, &bv)]).collect();
    Ok([(0, 1), (0, 2), (1, 2)].map(|(i, j): (usize, usize)| {
        let p = jet_lin_mul([&eu[i][0], &eu[i][1]], [&ev[j][0], &ev[j][1]]);
        let q = jet_lin_mul([&eu[j][0], &eu[j][1]], [&ev[i][0], &ev[i][1]]);
        JetBinaryForm { coeffs: (0..3).map(|k| &p[k] - &q[k]).collect() }
    }))
}

/// One focus of a line family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFocus {
    /// `(s:t)` with the focus at `s·a + t·b`.
    pub coords: (Scalar, Scalar),
    pub multiplicity: usize,
    pub point: ProjPoint,
    /// The parameter direction along which it is focal, when unique.
    pub direction: Option<(Scalar, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFoci {
    pub gcd: BinaryForm,
    /// Number of distinct foci over the complex numbers.
    pub count: usize,
    /// The rational ones.
    pub foci: Vec<LineFocus>,
}

pub fn line_family_foci(a: &[Jet2], b: &[Jet2]) -> Result<LineFoci> {
    check_line(a, b)?;
    let minors = jet_focus_minors(a, b)?.map(|m| m.constant_part());
    let gcd = match binform_gcd(&minors) {
        FormGcd::AllOfP1 => return Err(Error::WholeLineFocal),
        FormGcd::Form(g) => g,
    };
    let count = match gcd.degree() {
        2 if gcd.discriminant()?.is_zero() => 1,
        d => d,
    };
    let (a0, b0) = (values(a), values(b));
    let m = mat_nullspace(&[a0.clone(), b0.clone()]);
    let (au, av, bu, bv) = (d_u(a), d_v(a), d_u(b), d_v(b));
    let foci = gcd
        .rational_roots()
        .into_iter()
        .map(|((s, t), multiplicity)| {
            let comb = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
                x.iter().zip(y).map(|(p, q)| &s * p + &t * q).collect()
            };
            let (qu, qv) = (comb(&au, &bu), comb(&av, &bv));
            let k: Vec<Vec<Scalar>> = m.iter().map(|mi| vec![dot(mi, &qu), dot(mi, &qv)]).collect();
            let direction = (mat_rank(&k) == 1).then(|| {
                let n = normalize_first(&mat_nullspace(&k)[0]);
                (n[0].clone(), n[1].clone())
            });
            let point = ProjPoint::new(&comb(&a0, &b0)).expect("independent line points");
            LineFocus { coords: (s.clone(), t.clone()), multiplicity, point, direction }
        })
        .collect();
    Ok(LineFoci { gcd, count, foci })
}

/// Jets of the focus at the simple rational root `coords`; exact to first order.
pub fn focus_jets(a: &[Jet2], b: &[Jet2], coords: &(Scalar, Scalar)) -> Result<Vec<Jet2>> {
    check_line(a, b)?;
    for minor in jet_focus_minors(a, b)? {
        let c = minor.constant_part();
        if c.is_zero() || !c.eval(&coords.0, &coords.1).is_zero() {
            continue;
        }
        if let Ok((s, t)) = minor.lift_simple_root(coords) {
            return Ok(a.iter().zip(b).map(|(p, q)| &(&s * p) + &(&t * q)).collect());
        }
    }
    Err(Error::MultipleRoot)
}

/// For a one-parameter line family (parameter `u`), the point where the line touches its
/// envelope, as jets exact to first order.
pub fn curve_family_focus(a: &[Jet2], b: &[Jet2]) -> Result<Vec<Jet2>> {
    check_line(a, b)?;
    let m = jet_nullspace(&[a.to_vec(), b.to_vec()])?;
    let (au, bu) = (partial_u_vec(a), partial_u_vec(b));
    let forms: Vec<[Jet2; 2]> = m.iter().map(|mi| [jet_dot(mi, &au), jet_dot(mi, &bu)]).collect();
    let constants: Vec<BinaryForm> =
        forms.iter().map(|f| BinaryForm::new(vec![f[0].value().clone(), f[1].value().clone()])).collect();
    match binform_gcd(&constants) {
        FormGcd::AllOfP1 => Err(Error::WholeLineFocal),
        FormGcd::Form(g) if g.degree() == 1 => {
            let [alpha, beta] =
                forms.into_iter().find(|f| f[0].is_unit() || f[1].is_unit()).expect("a form with nonzero constant part");
            // alpha·s + beta·t vanishes at (s:t) = (beta : -alpha)
            Ok(a.iter().zip(b).map(|(p, q)| &(&beta * p) - &(&alpha * q)).collect())
        }
        FormGcd::Form(g) => Err(Error::UnexpectedFocusCount(g.degree())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::parse_chart;
    use crate::focal::{characteristic_forms, developable_directions, DirectionSet};
    use crate::frame::eval_frame;
    use crate::poly::Poly;
    use crate::scalar::{int, proportional};

    fn jets(maps: &[Poly], u0: i64, v0: i64) -> Vec<Jet2> {
        maps.iter().map(|p| p.jet_at(&int(u0), &int(v0))).collect()
    }

    fn pt(c: [&str; 5]) -> Vec<Poly> {
        let text = format!("vars: u v\npoint: [{}]\npoint: [1,0,0,0,0]\npoint: [0,1,0,0,0]\n", c.join(","));
        parse_chart(&text).unwrap().maps[0].to_vec()
    }

    #[test]
    fn hyperbolic_family_has_two_foci() {
        // q = s·(1,u,0,0,0) + t·(0,0,1,v,0): focal iff λs = 0 and μt = 0
        let a = jets(&pt(["1", "u", "0", "0", "0"]), 2, 3);
        let b = jets(&pt(["0", "0", "1", "v", "0"]), 2, 3);
        let f = line_family_foci(&a, &b).unwrap();
        assert_eq!(f.count, 2);
        assert_eq!(f.gcd, BinaryForm::from_ints(&[0, 1, 0]));
        let points: Vec<_> = f.foci.iter().map(|x| x.point.clone()).collect();
        assert_eq!(points, vec![ProjPoint::from_ints([1, 2, 0, 0, 0]), ProjPoint::from_ints([0, 0, 1, 3, 0])]);
        assert_eq!(f.foci[0].direction, Some((int(0), int(1))));
        assert_eq!(f.foci[1].direction, Some((int(1), int(0))));
    }

    #[test]
    fn parabolic_family_has_one_double_focus() {
        let a = jets(&pt(["1", "u", "0", "0", "0"]), 2, 3);
        let b = jets(&pt(["0", "v", "1", "u", "0"]), 2, 3);
        let f = line_family_foci(&a, &b).unwrap();
        assert_eq!(f.count, 1);
        assert_eq!(f.foci.len(), 1);
        assert_eq!(f.foci[0].multiplicity, 2);
        assert_eq!(f.foci[0].point, ProjPoint::from_ints([1, 2, 0, 0, 0]));
    }

    #[test]
    fn tangent_lines_of_a_curve_focus_at_the_curve() {
        let a = jets(&pt(["1", "u", "u^2", "u^3", "u^4"]), 2, 0);
        let b = jets(&pt(["0", "1", "2*u", "3*u^2", "4*u^3"]), 2, 0);
        let p = curve_family_focus(&a, &b).unwrap();
        assert!(proportional(&values(&p), &values(&a)));
        // the focus moves along the curve
        let c_u = d_u(&a);
        let rank = span_rank(&[values(&a), c_u, d_u(&p)]);
        assert_eq!(rank, 2);
        // as a two-parameter family (trivial in v) every point is focal for the v-direction
        assert_eq!(line_family_foci(&a, &b), Err(Error::WholeLineFocal));
    }

    #[test]
    fn constant_family_is_wholly_focal() {
        let a = jets(&pt(["1", "0", "0", "0", "0"]), 1, 1);
        let b = jets(&pt(["0", "1", "0", "0", "0"]), 1, 1);
        assert_eq!(line_family_foci(&a, &b), Err(Error::WholeLineFocal));
    }

    #[test]
    fn translation_surface_focal_lines() {
        let text = "vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n";
        let frame = eval_frame(&parse_chart(text).unwrap(), (&int(1), &int(1))).unwrap();
        let forms = characteristic_forms(&frame);
        assert!(matches!(developable_directions(&forms), DirectionSet::Finite { .. }));
        let dir = lift_direction(&forms, &(int(1), int(0))).unwrap();
        let line = focal_line_jets(&frame, &forms, &dir).unwrap();
        // direction (1:0) gives the line <x, x_v>
        let expect = ProjLine::through(&[1, 1, 1, 1, 1].map(int), &[0, 0, 0, 1, 2].map(int)).unwrap();
        assert_eq!(line.line(), expect);
    }
}
