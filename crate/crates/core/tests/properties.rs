use num_traits::Zero;
use proptest::prelude::*;

use focal_core::binform::{binform_gcd, BinaryForm, FormGcd};
use focal_core::chart::PointMap;
use focal_core::classify::sample_at;
use focal_core::linalg::{determinant, mat_mul, mat_rank};
use focal_core::oracle::oracle_is_focal;
use focal_core::poly::Poly;
use focal_core::proj::{plucker, plucker_index};
use focal_core::scalar::{frac, int};
use focal_core::{parse_chart, PlaneChart, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn small_int() -> impl Strategy<Value = Scalar> {
    (-4i64..=4).prop_map(int)
}

/// Polynomials of degree ≤ 3 with small integer coefficients.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), -3i64..=3), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .filter(|((i, j), _)| i + j <= 3)
            .fold(Poly::zero(), |acc, ((i, j), c)| &acc + &Poly::monomial(int(c), i, j))
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(small_int(), cols), rows)
}

fn form(deg: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(small_int(), deg + 1).prop_map(BinaryForm::new)
}

const BETA: &str = "vars: u v\npoint: [1, u, u^2, v, v^2]\npoint: [0, 1, 2*u, 0, 0]\npoint: [0, 0, 0, 1, 2*v]\n";

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jets_respect_products(p in poly(), q in poly(), u0 in scalar(), v0 in scalar()) {
        let product = (&p * &q).jet_at(&u0, &v0);
        prop_assert_eq!(product, &p.jet_at(&u0, &v0) * &q.jet_at(&u0, &v0));
    }

    #[test]
    fn jet_derivatives_match_polynomial_derivatives(p in poly(), u0 in scalar(), v0 in scalar()) {
        let j = p.jet_at(&u0, &v0);
        prop_assert_eq!(j.du().clone(), p.partial_u().eval(&u0, &v0));
        prop_assert_eq!(j.dv().clone(), p.partial_v().eval(&u0, &v0));
        prop_assert_eq!(j.duu(), p.partial_u().partial_u().eval(&u0, &v0));
        prop_assert_eq!(j.duv().clone(), p.partial_u().partial_v().eval(&u0, &v0));
    }

    #[test]
    fn rank_is_invariant_under_invertible_row_operations(a in matrix(3, 5), t in matrix(3, 3)) {
        prop_assume!(!determinant(&t).is_zero());
        prop_assert_eq!(mat_rank(&mat_mul(&t, &a)), mat_rank(&a));
    }

    #[test]
    fn gcd_divides_every_input(f in form(2), g in form(3), h in form(2)) {
        let forms = [f.mul(&h), g.mul(&h)];
        match binform_gcd(&forms) {
            FormGcd::AllOfP1 => prop_assert!(forms.iter().all(BinaryForm::is_zero)),
            FormGcd::Form(d) => {
                for x in &forms {
                    prop_assert!(x.div_exact(&d).is_some());
                }
                if !h.is_zero() && !forms.iter().all(BinaryForm::is_zero) {
                    prop_assert!(d.degree() >= h.degree());
                }
            }
        }
    }

    #[test]
    fn plucker_vectors_satisfy_the_quadratic_relations(
        a in prop::collection::vec(scalar(), 5),
        b in prop::collection::vec(scalar(), 5),
    ) {
        let p = plucker(&a, &b);
        let at = |i: usize, j: usize| &p[plucker_index(i, j)];
        for skip in 0..5 {
            let idx: Vec<usize> = (0..5).filter(|&k| k != skip).collect();
            let [i, j, k, l] = [idx[0], idx[1], idx[2], idx[3]];
            let rel = at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k);
            prop_assert!(rel.is_zero());
        }
    }

    #[test]
    fn charts_survive_printing(maps in prop::collection::vec(poly(), 15)) {
        let maps: [PointMap; 3] = std::array::from_fn(|i| std::array::from_fn(|k| maps[5 * i + k].clone()));
        // identically zero point maps are rejected by the parser
        prop_assume!(maps.iter().all(|m| m.iter().any(|p| !p.is_zero())));
        let chart = PlaneChart::new(maps);
        prop_assert_eq!(parse_chart(&chart.to_text()).unwrap(), chart);
    }

    #[test]
    fn engine_agrees_with_oracle(
        u0 in scalar(), v0 in scalar(),
        q in prop::collection::vec(small_int(), 3),
        l in small_int(), m in small_int(),
    ) {
        prop_assume!(!(l.is_zero() && m.is_zero()) && q.iter().any(|x| !x.is_zero()));
        let chart = parse_chart(BETA).unwrap();
        let s = sample_at(&chart, (u0.clone(), v0.clone())).unwrap();
        let q: [Scalar; 3] = q.try_into().unwrap();
        let oracle = oracle_is_focal(&chart, (&u0, &v0), &q, (&l, &m)).unwrap();
        prop_assert_eq!(s.forms.is_focal(&q, &l, &m), oracle);
    }
}
