//! A chart evaluated at a base point.

use crate::chart::PlaneChart;
use crate::error::{Error, Result};
use crate::jet::{jet_combination, Jet2};
use crate::linalg::{constant_part, jet_nullspace, mat_rank};
use crate::scalar::Scalar;

/// Jets of the three spanning points and of their first partials, plus two jet hyperplanes
/// cutting out the moving plane.
///
/// The partials are jets of the symbolic derivatives, so they are exact to second order
/// (unlike `Jet2::partial_u`, which loses one order).
#[derive(Debug, Clone)]
pub struct JetFrame {
    pub base: (Scalar, Scalar),
    pub points: [Vec<Jet2>; 3],
    pub points_u: [Vec<Jet2>; 3],
    pub points_v: [Vec<Jet2>; 3],
    pub duals: [Vec<Jet2>; 2],
}

/// Homogeneous coordinates `(a:b:c)` of `a·x + b·y + c·z` on the moving plane.
pub type PlaneCoords = [Scalar; 3];

impl JetFrame {
    /// Constant parts of the spanning points.
    pub fn point_values(&self) -> Vec<Vec<Scalar>> {
        self.points.iter().map(|p| crate::jet::values(p)).collect()
    }

    /// Point of P4 (as jets) with plane coordinates given as jets.
    pub fn plane_point(&self, coeffs: &[Jet2]) -> Vec<Jet2> {
        jet_combination(coeffs, &self.points)
    }

    /// Constant point of P4 with constant plane coordinates.
    pub fn plane_point_value(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        let pts = self.point_values();
        (0..5)
            .map(|k| coeffs.iter().zip(&pts).map(|(c, p)| c * &p[k]).sum())
            .collect()
    }
}

pub fn eval_frame(chart: &PlaneChart, base: (&Scalar, &Scalar)) -> Result<JetFrame> {
    let (u0, v0) = base;
    let jets = |f: &dyn Fn(&crate::poly::Poly) -> crate::poly::Poly| -> [Vec<Jet2>; 3] {
        std::array::from_fn(|i| chart.maps[i].iter().map(|p| f(p).jet_at(u0, v0)).collect())
    };
    let points = jets(&|p| p.clone());
    if mat_rank(&constant_part(&points)) < 3 {
        return Err(Error::DegenerateSpanAtBase);
    }
    let duals = jet_nullspace(&points)?;
    let duals: [Vec<Jet2>; 2] = duals.try_into().expect("rank 3 in five coordinates");
    Ok(JetFrame {
        base: (u0.clone(), v0.clone()),
        points,
        points_u: jets(&|p| p.partial_u()),
        points_v: jets(&|p| p.partial_v()),
        duals,
    })
}
