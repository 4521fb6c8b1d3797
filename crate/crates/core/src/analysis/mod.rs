//! Verification harness: inner products on the torus, Laplacian eigenvalue
//! checks and symmetry identities, plus the suite runners used by the CLI.
//!
//! The inner product is taken over the full torus `[0,1]^n` in
//! α-coordinates, `⟨a, b⟩ = ∫ a(x) conj(b(x)) dx`.

mod laplacian;
mod suites;
mod symmetry;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exp_ring::ExpSum;
use crate::lie::{Rank, Weight};
use crate::orbit_functions::{AlphaPoint, OrbitFunction, OrbitKind};

pub use laplacian::{laplacian_eigenvalue_check, Frame, LaplacianCheck, LaplacianOutcome, MIN_MAGNITUDE};
pub use suites::{decomposition_round_trip, run_suite, CheckResult, RoundTrip, Suite, SuiteConfig, SuiteReport};
pub use symmetry::{symmetry_suite, SymmetryReport};

/// Seed used when none is given; recorded in every report.
pub const DEFAULT_SEED: u64 = 0x5EED_A11C_E5ED;

/// Seeded generator for one named stream of a run.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform point of `[0,1)^n` in α-coordinates.
pub fn random_alpha_point(rng: &mut impl Rng, rank: Rank) -> AlphaPoint {
    let coords = (0..rank.get()).map(|_| rng.gen::<f64>()).collect();
    AlphaPoint::new(rank, coords).expect("finite coordinates")
}

/// Uniform dominant weight with coordinates in `0..=bound`.
pub fn random_dominant(rng: &mut impl Rng, rank: Rank, bound: i64) -> Weight {
    let coords = (0..rank.get()).map(|_| rng.gen_range(0..=bound)).collect();
    Weight::new(rank, coords).expect("length matches rank")
}

/// All dominant weights with coordinates in `0..=bound`, in ascending
/// lexicographic order of coordinates.
pub fn dominant_box(rank: Rank, bound: i64) -> Vec<Weight> {
    let n = rank.get();
    let mut out = Vec::new();
    let mut coords = vec![0i64; n];
    loop {
        out.push(Weight::new(rank, coords.clone()).expect("length matches rank"));
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if coords[k] < bound {
                coords[k] += 1;
                break;
            }
            coords[k] = 0;
        }
    }
}

/// Exact torus inner product: distinct lattice exponentials are orthogonal,
/// so only shared weights contribute.
pub fn torus_inner_product(a: &ExpSum, b: &ExpSum) -> Result<BigInt> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank().get(), right: b.rank().get() });
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    Ok(small.terms().map(|(w, c)| c * large.coeff(w)).sum())
}

/// Rectangle-rule value of the torus inner product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureValue {
    pub re: f64,
    pub im: f64,
    pub points_per_axis: usize,
    /// `N ≤ 2 max |μ_j|`: distinct exponentials may alias onto each other.
    pub aliasing_possible: bool,
}

impl QuadratureValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Values of an orbit function on the grid `x = k / N`, `k ∈ {0..N-1}^n`.
#[derive(Debug, Clone)]
pub struct GridSamples {
    values: Vec<Complex64>,
    points_per_axis: usize,
    max_abs_coord: i64,
}

impl GridSamples {
    pub fn new(f: &OrbitFunction, points_per_axis: usize) -> Self {
        let n = f.rank().get();
        let total = points_per_axis.pow(n as u32);
        let mut values = Vec::with_capacity(total);
        let mut idx = vec![0usize; n];
        let mut x = vec![0.0; n];
        for _ in 0..total {
            for (xk, &ik) in x.iter_mut().zip(&idx) {
                *xk = ik as f64 / points_per_axis as f64;
            }
            values.push(f.eval_alpha_coords(&x));
            for ik in idx.iter_mut() {
                *ik += 1;
                if *ik < points_per_axis {
                    break;
                }
                *ik = 0;
            }
        }
        let max_abs_coord = max_abs_orbit_coord(f);
        GridSamples { values, points_per_axis, max_abs_coord }
    }

    pub fn inner(&self, other: &GridSamples) -> QuadratureValue {
        assert_eq!(self.points_per_axis, other.points_per_axis, "grids differ");
        let products: Vec<Complex64> = self.values.iter().zip(&other.values).map(|(a, b)| a * b.conj()).collect();
        let v = crate::orbit_functions::pairwise_sum(&products) / self.values.len() as f64;
        let bound = 2 * self.max_abs_coord.max(other.max_abs_coord);
        QuadratureValue {
            re: v.re,
            im: v.im,
            points_per_axis: self.points_per_axis,
            aliasing_possible: self.points_per_axis as i64 <= bound,
        }
    }
}

fn max_abs_orbit_coord(f: &OrbitFunction) -> i64 {
    crate::orbit_functions::orbit_for(f.kind(), f.label())
        .map(|o| o.points().iter().flat_map(|p| p.weight.coords().iter().map(|c| c.abs())).max().unwrap_or(0))
        .unwrap_or(0)
}

/// Rectangle rule with `N` points per axis for `⟨F_λ, F_λ'⟩`.
pub fn quadrature_inner_product(
    kind: OrbitKind,
    lambda: &Weight,
    lambda2: &Weight,
    n: usize,
) -> Result<QuadratureValue> {
    if lambda.rank() != lambda2.rank() {
        return Err(Error::RankMismatch { left: lambda.rank().get(), right: lambda2.rank().get() });
    }
    let a = GridSamples::new(&OrbitFunction::new(kind, lambda)?, n);
    let b = GridSamples::new(&OrbitFunction::new(kind, lambda2)?, n);
    Ok(a.inner(&b))
}
