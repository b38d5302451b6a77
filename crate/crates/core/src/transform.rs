//! Chart transformations that must not change the class: projective maps of P4, affine
//! changes of parameters, and constant re-spanning of the plane.

use num_traits::Zero;

use crate::chart::{PlaneChart, PointMap};
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::poly::Poly;
use crate::sampling::Sampler;
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChartAction {
    /// `X ↦ T·X` for an invertible 5×5 matrix.
    Projective(Vec<Vec<Scalar>>),
    /// `(u, v) ↦ (a·u + b·v + c, d·u + e·v + f)` given as `[[a, b, c], [d, e, f]]`.
    Reparametrize([[Scalar; 3]; 2]),
    /// Replaces the spanning maps by `R·(X, Y, Z)` for an invertible 3×3 matrix.
    Respan(Vec<Vec<Scalar>>),
}

fn combine(coeffs: &[Scalar], maps: &[Poly]) -> Poly {
    coeffs
        .iter()
        .zip(maps)
        .filter(|(c, _)| !c.is_zero())
        .fold(Poly::zero(), |acc, (c, p)| &acc + &p.scale(c))
}

fn check_square(m: &[Vec<Scalar>], n: usize) -> Result<()> {
    if m.len() != n || m.iter().any(|r| r.len() != n) || determinant(m).is_zero() {
        return Err(Error::SingularTransform);
    }
    Ok(())
}

pub fn transform_chart(chart: &PlaneChart, action: &ChartAction) -> Result<PlaneChart> {
    let maps: [PointMap; 3] = match action {
        ChartAction::Projective(t) => {
            check_square(t, 5)?;
            chart.maps.clone().map(|m| std::array::from_fn(|k| combine(&t[k], &m)))
        }
        ChartAction::Reparametrize(a) => {
            let lin = |r: &[Scalar; 3]| -> Poly {
                &(&Poly::u().scale(&r[0]) + &Poly::v().scale(&r[1])) + &Poly::constant(r[2].clone())
            };
            if (&a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]).is_zero() {
                return Err(Error::SingularTransform);
            }
            let (nu, nv) = (lin(&a[0]), lin(&a[1]));
            chart.maps.clone().map(|m| m.map(|p| p.compose(&nu, &nv)))
        }
        ChartAction::Respan(r) => {
            check_square(r, 3)?;
            std::array::from_fn(|i| {
                std::array::from_fn(|k| {
                    let column: Vec<Poly> = chart.maps.iter().map(|m| m[k].clone()).collect();
                    combine(&r[i], &column)
                })
            })
        }
    };
    Ok(PlaneChart { maps, name: chart.name.clone(), expect: chart.expect })
}

/// A random invertible `n×n` matrix with small integer entries.
pub fn random_invertible(sampler: &mut Sampler, n: usize, bound: i64) -> Vec<Vec<Scalar>> {
    loop {
        let m: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| sampler.small_int(bound)).collect()).collect();
        if !determinant(&m).is_zero() {
            return m;
        }
    }
}

pub fn random_projective(sampler: &mut Sampler) -> ChartAction {
    ChartAction::Projective(random_invertible(sampler, 5, 3))
}

pub fn random_reparametrization(sampler: &mut Sampler) -> ChartAction {
    let m = random_invertible(sampler, 2, 3);
    ChartAction::Reparametrize([
        [m[0][0].clone(), m[0][1].clone(), sampler.small_int(3)],
        [m[1][0].clone(), m[1][1].clone(), sampler.small_int(3)],
    ])
}

pub fn random_respan(sampler: &mut Sampler) -> ChartAction {
    ChartAction::Respan(random_invertible(sampler, 3, 3))
}

pub fn identity_action(n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| (0..n).map(|j| int(i64::from(i == j))).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::parse_chart;
    use crate::classify::sample_at;
    use crate::linalg::{mat_mul, transpose};

    const BETA: &str =
        "vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n";

    #[test]
    fn identities_leave_chart_alone() {
        let c = parse_chart(BETA).unwrap();
        assert_eq!(transform_chart(&c, &ChartAction::Projective(identity_action(5))).unwrap(), c);
        assert_eq!(transform_chart(&c, &ChartAction::Respan(identity_action(3))).unwrap(), c);
        let id = [[int(1), int(0), int(0)], [int(0), int(1), int(0)]];
        assert_eq!(transform_chart(&c, &ChartAction::Reparametrize(id)).unwrap(), c);
    }

    #[test]
    fn singular_matrices_are_rejected() {
        let c = parse_chart(BETA).unwrap();
        let mut t = identity_action(5);
        t[4][4] = int(0);
        assert_eq!(transform_chart(&c, &ChartAction::Projective(t)), Err(Error::SingularTransform));
        let r = vec![vec![int(1), int(2), int(0)], vec![int(2), int(4), int(0)], vec![int(0), int(0), int(1)]];
        assert_eq!(transform_chart(&c, &ChartAction::Respan(r)), Err(Error::SingularTransform));
    }

    #[test]
    fn swapping_coordinates() {
        let c = parse_chart("vars: u v\npoint: [1,0,0,0,0]\npoint: [0,1,0,0,0]\npoint: [0,0,1,u,v]\n").unwrap();
        let mut t = identity_action(5);
        t.swap(0, 4);
        let swapped = transform_chart(&c, &ChartAction::Projective(t)).unwrap();
        assert_eq!(swapped.maps[0][4], Poly::from_int(1));
        assert_eq!(swapped.maps[2][0], Poly::v());
    }

    #[test]
    fn respanning_transforms_the_conic_by_congruence() {
        let c = parse_chart(BETA).unwrap();
        let r = random_invertible(&mut Sampler::from_seed(4), 3, 3);
        let d = transform_chart(&c, &ChartAction::Respan(r.clone())).unwrap();
        let base = (int(1), int(1));
        let (m1, m2) = (sample_at(&c, base.clone()).unwrap().conic, sample_at(&d, base).unwrap().conic);
        assert_eq!(m2.rank, 2);
        // Q' = Rᵀ-coordinates: a point with new coordinates q has old coordinates Rᵀq, so the
        // new matrix is proportional to R·M·Rᵀ (the duals may be rescaled).
        let old: Vec<Vec<Scalar>> = m1.matrix.iter().map(|r| r.to_vec()).collect();
        let pushed = mat_mul(&mat_mul(&r, &old), &transpose(&r));
        let new: Vec<Vec<Scalar>> = m2.matrix.iter().map(|r| r.to_vec()).collect();
        let flat = |m: &Vec<Vec<Scalar>>| m.iter().flatten().cloned().collect::<Vec<_>>();
        assert!(crate::scalar::proportional(&flat(&pushed), &flat(&new)));
    }
}
