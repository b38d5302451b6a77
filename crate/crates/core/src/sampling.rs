//! Seeded rational sampling and the nondegeneracy check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chart::PlaneChart;
use crate::error::{Error, Result};
use crate::linalg::mat_rank;
use crate::scalar::{frac, int, is_zero_vec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplingConfig {
    pub seed: u64,
    /// Base points per decision.
    pub samples: usize,
    /// Extra base points allowed when a sample turns out non-generic.
    pub budget: usize,
    /// Bound on numerators of sampled rationals.
    pub height: i64,
    /// Bound on denominators of sampled rationals.
    pub max_den: i64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig { seed: 0, samples: 5, budget: 12, height: 40, max_den: 7 }
    }
}

impl SamplingConfig {
    pub fn with_seed(seed: u64) -> Self {
        SamplingConfig { seed, ..Default::default() }
    }
}

/// One pseudo-random stream; every random choice of a computation draws from it in a fixed
/// order, which makes results reproducible from the seed.
pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
    max_den: i64,
}

impl Sampler {
    pub fn new(cfg: &SamplingConfig) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(cfg.seed), height: cfg.height.max(1), max_den: cfg.max_den.max(1) }
    }

    pub fn from_seed(seed: u64) -> Self {
        Sampler::new(&SamplingConfig::with_seed(seed))
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn scalar(&mut self) -> Scalar {
        let n = self.int_in(-self.height, self.height);
        let d = self.int_in(1, self.max_den);
        frac(n, d)
    }

    /// A small nonzero integer, handy for coefficients of constructions.
    pub fn small_nonzero(&mut self, bound: i64) -> Scalar {
        loop {
            let n = self.int_in(-bound, bound);
            if n != 0 {
                return int(n);
            }
        }
    }

    pub fn small_int(&mut self, bound: i64) -> Scalar {
        int(self.int_in(-bound, bound))
    }

    pub fn base(&mut self) -> (Scalar, Scalar) {
        (self.scalar(), self.scalar())
    }

    pub fn nonzero_vector(&mut self, len: usize) -> Vec<Scalar> {
        loop {
            let v: Vec<Scalar> = (0..len).map(|_| self.scalar()).collect();
            if !is_zero_vec(&v) {
                return v;
            }
        }
    }

    pub fn plane_coords(&mut self) -> [Scalar; 3] {
        self.nonzero_vector(3).try_into().expect("three entries")
    }

    pub fn direction(&mut self) -> (Scalar, Scalar) {
        let v = self.nonzero_vector(2);
        (v[0].clone(), v[1].clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub ok: bool,
    /// Dimension of the union of the planes.
    pub realization_dim: usize,
    pub bases_tried: usize,
}

fn eval_rows(chart: &PlaneChart, f: impl Fn(&crate::poly::Poly) -> crate::poly::Poly, u: &Scalar, v: &Scalar) -> Vec<Vec<Scalar>> {
    chart.maps.iter().map(|m| m.iter().map(|p| f(p).eval(u, v)).collect()).collect()
}

/// Checks that the planes span generically and that their union fills P4.
pub fn validate_with(chart: &PlaneChart, cfg: &SamplingConfig, sampler: &mut Sampler) -> Result<Validation> {
    let mut realization_dim = 0;
    let mut spanning = 0;
    let mut tried = 0;
    while spanning < cfg.samples && tried < cfg.samples + cfg.budget && realization_dim < 4 {
        tried += 1;
        let (u, v) = sampler.base();
        let points = eval_rows(chart, |p| p.clone(), &u, &v);
        if mat_rank(&points) < 3 {
            continue;
        }
        spanning += 1;
        let q = sampler.plane_coords();
        let du = eval_rows(chart, |p| p.partial_u(), &u, &v);
        let dv = eval_rows(chart, |p| p.partial_v(), &u, &v);
        let moved = |d: &Vec<Vec<Scalar>>| -> Vec<Scalar> {
            (0..5).map(|k| (0..3).map(|i| &q[i] * &d[i][k]).fold(int(0), |a, x| a + x)).collect()
        };
        let mut rows = points;
        rows.push(moved(&du));
        rows.push(moved(&dv));
        realization_dim = realization_dim.max(mat_rank(&rows) - 1);
    }
    if spanning == 0 {
        return Err(Error::DegenerateChart);
    }
    Ok(Validation { ok: realization_dim == 4, realization_dim, bases_tried: tried })
}

pub fn validate_chart(chart: &PlaneChart, cfg: &SamplingConfig) -> Result<Validation> {
    validate_with(chart, cfg, &mut Sampler::new(cfg))
}
