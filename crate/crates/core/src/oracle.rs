//! Focal test straight from the definition, sharing nothing with the dual-basis path:
//! `Q` is focal for `(λ:μ)` when its first-order motion in that direction stays in the plane.

use crate::chart::PlaneChart;
use crate::error::{Error, Result};
use crate::frame::PlaneCoords;
use crate::linalg::mat_rank;
use crate::poly::Poly;
use crate::scalar::Scalar;

pub fn oracle_is_focal(
    chart: &PlaneChart,
    base: (&Scalar, &Scalar),
    q: &PlaneCoords,
    dir: (&Scalar, &Scalar),
) -> Result<bool> {
    let (u0, v0) = base;
    let eval_all = |f: &dyn Fn(&Poly) -> Poly| -> Vec<Vec<Scalar>> {
        chart.maps.iter().map(|m| m.iter().map(|p| f(p).eval(u0, v0)).collect()).collect()
    };
    let points = eval_all(&|p| p.clone());
    if mat_rank(&points) < 3 {
        return Err(Error::DegenerateSpanAtBase);
    }
    let du = eval_all(&|p| p.partial_u());
    let dv = eval_all(&|p| p.partial_v());
    let motion: Vec<Scalar> = (0..5)
        .map(|k| {
            (0..3)
                .map(|i| &q[i] * (dir.0 * &du[i][k] + dir.1 * &dv[i][k]))
                .fold(Scalar::from_integer(0.into()), |acc, x| acc + x)
        })
        .collect();
    let mut rows = points;
    rows.push(motion);
    Ok(mat_rank(&rows) <= 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::parse_chart;
    use crate::scalar::int;

    const DELTA: &str = "vars: u v\npoint: [1,0,0,0,0]\npoint: [0,1,0,0,0]\npoint: [0,0,1,u,v]\n";
    const BETA: &str =
        "vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n";

    fn focal(text: &str, q: [i64; 3], dir: (i64, i64)) -> bool {
        oracle_is_focal(&parse_chart(text).unwrap(), (&int(1), &int(1)), &q.map(int), (&int(dir.0), &int(dir.1)))
            .unwrap()
    }

    #[test]
    fn worked_examples() {
        assert!(focal(DELTA, [0, 1, 0], (1, 0)));
        assert!(focal(DELTA, [0, 1, 0], (3, -7)));
        assert!(!focal(BETA, [1, 1, 0], (1, 0)));
        assert!(focal(BETA, [1, 0, 5], (1, 0)));
    }
}
