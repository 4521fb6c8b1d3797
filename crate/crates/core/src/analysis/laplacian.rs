//! Finite-difference Laplacian on the hyperplane `Σ x_k = 0`.
//!
//! Every exponential `e^{2πi⟨l, x⟩}` with `l` on the hyperplane is an
//! eigenfunction of the Laplacian restricted there with eigenvalue
//! `−4π²|l|²`, and `|l|² = ⟨λ, λ⟩` is constant along a Weyl orbit.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::random_alpha_point;
use crate::error::{Error, Result};
use crate::lie::{inner_product, Rank, Weight};
use crate::orbit_functions::{EPoint, OrbitFunction, OrbitKind};

/// Points with `|f|` below this fraction of the torus L² norm of `f`
/// (`√(number of terms)`) are replaced by a fresh random point before the
/// relative error is taken.
pub const MIN_MAGNITUDE: f64 = 0.5;

/// Below this at every retried point the check is inconclusive.
const DEGENERATE_MAGNITUDE: f64 = 1e-6;

const MAX_DRAWS: usize = 64;

/// Orthonormal frame of the hyperplane in `ℝ^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Frame {
    /// Gram–Schmidt applied to `e_1 − e_2, …, e_n − e_{n+1}`.
    GramSchmidt,
    /// `(1, …, 1, −k, 0, …) / √(k(k+1))`.
    Helmert,
}

impl Frame {
    pub fn vectors(self, rank: Rank) -> Vec<Vec<f64>> {
        let d = rank.dim();
        match self {
            Frame::GramSchmidt => {
                let mut out: Vec<Vec<f64>> = Vec::with_capacity(d - 1);
                for i in 0..d - 1 {
                    let mut v = vec![0.0; d];
                    v[i] = 1.0;
                    v[i + 1] = -1.0;
                    for u in &out {
                        let dot: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
                        for (vk, uk) in v.iter_mut().zip(u) {
                            *vk -= dot * uk;
                        }
                    }
                    let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
                    v.iter_mut().for_each(|a| *a /= norm);
                    out.push(v);
                }
                out
            }
            Frame::Helmert => (1..d)
                .map(|k| {
                    let s = ((k * (k + 1)) as f64).sqrt();
                    (0..d)
                        .map(|i| match i.cmp(&k) {
                            std::cmp::Ordering::Less => 1.0 / s,
                            std::cmp::Ordering::Equal => -(k as f64) / s,
                            std::cmp::Ordering::Greater => 0.0,
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Result at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaplacianOutcome {
    pub magnitude: f64,
    /// `|Δ_h f + 4π²⟨λ,λ⟩ f| / (max(4π²⟨λ,λ⟩, 1) |f|)`
    pub relative_error: f64,
}

/// Central second differences along `frame` at step `h`, compared with
/// `−4π²⟨λ,λ⟩ f`.
pub fn laplacian_eigenvalue_check(f: &OrbitFunction, x: &EPoint, h: f64, frame: Frame) -> Result<LaplacianOutcome> {
    if f.rank() != x.rank() {
        return Err(Error::RankMismatch { left: f.rank().get(), right: x.rank().get() });
    }
    let eigen = 4.0 * PI * PI * norm_squared(f.label())?;
    let x0 = x.coords();
    let center = f.eval_e_coords(x0);
    let mut lap = Complex64::new(0.0, 0.0);
    let mut shifted = x0.to_vec();
    for v in frame.vectors(f.rank()) {
        for (s, (a, b)) in shifted.iter_mut().zip(x0.iter().zip(&v)) {
            *s = a + h * b;
        }
        let plus = f.eval_e_coords(&shifted);
        for (s, (a, b)) in shifted.iter_mut().zip(x0.iter().zip(&v)) {
            *s = a - h * b;
        }
        let minus = f.eval_e_coords(&shifted);
        lap += (plus - center * 2.0 + minus) / (h * h);
    }
    let magnitude = center.norm();
    let relative_error = (lap + center * eigen).norm() / (eigen.max(1.0) * magnitude);
    Ok(LaplacianOutcome { magnitude, relative_error })
}

/// `⟨λ, λ⟩` for the dominant representative used by `f`.
fn norm_squared(lambda: &Weight) -> Result<f64> {
    let q = inner_product(lambda, lambda)?;
    Ok(*q.numer() as f64 / *q.denom() as f64)
}

/// Aggregate over random points at steps `h` and `h/2`.
#[derive(Debug, Clone, Serialize)]
pub struct LaplacianCheck {
    pub kind: OrbitKind,
    pub lambda: Weight,
    pub norm_squared: f64,
    pub h: f64,
    pub frame: Frame,
    pub points: usize,
    pub discarded_draws: usize,
    pub max_relative_error: f64,
    pub max_relative_error_half: f64,
    /// `Σ err(h) / Σ err(h/2)` over the points.
    pub aggregate_ratio: f64,
    pub min_point_ratio: f64,
    pub max_point_ratio: f64,
    /// The function was below the degenerate threshold at every draw.
    pub inconclusive: bool,
}

impl LaplacianCheck {
    pub fn run(
        kind: OrbitKind,
        lambda: &Weight,
        h: f64,
        points: usize,
        rng: &mut impl Rng,
        frame: Frame,
    ) -> Result<LaplacianCheck> {
        let f = OrbitFunction::new(kind, lambda)?;
        let rank = lambda.rank();
        let threshold = MIN_MAGNITUDE * (f.len() as f64).sqrt();
        let mut check = LaplacianCheck {
            kind,
            lambda: lambda.clone(),
            norm_squared: norm_squared(lambda)?,
            h,
            frame,
            points: 0,
            discarded_draws: 0,
            max_relative_error: 0.0,
            max_relative_error_half: 0.0,
            aggregate_ratio: f64::NAN,
            min_point_ratio: f64::INFINITY,
            max_point_ratio: 0.0,
            inconclusive: false,
        };
        let (mut sum_h, mut sum_half) = (0.0, 0.0);
        for _ in 0..points {
            let mut best: Option<(EPoint, f64)> = None;
            for _ in 0..MAX_DRAWS {
                let x = random_alpha_point(rng, rank).to_e();
                let m = f.eval_e(&x)?.norm();
                if best.as_ref().is_none_or(|(_, b)| m > *b) {
                    best = Some((x, m));
                }
                if m >= threshold {
                    break;
                }
                check.discarded_draws += 1;
            }
            let (x, m) = best.expect("at least one draw");
            if m < DEGENERATE_MAGNITUDE {
                check.inconclusive = true;
                continue;
            }
            let full = laplacian_eigenvalue_check(&f, &x, h, frame)?;
            let half = laplacian_eigenvalue_check(&f, &x, h / 2.0, frame)?;
            check.points += 1;
            check.max_relative_error = check.max_relative_error.max(full.relative_error);
            check.max_relative_error_half = check.max_relative_error_half.max(half.relative_error);
            sum_h += full.relative_error;
            sum_half += half.relative_error;
            let ratio = full.relative_error / half.relative_error;
            check.min_point_ratio = check.min_point_ratio.min(ratio);
            check.max_point_ratio = check.max_point_ratio.max(ratio);
        }
        if check.points > 0 {
            check.aggregate_ratio = sum_h / sum_half;
        }
        Ok(check)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::rng_for;

    fn w(c: &[i64]) -> Weight {
        Weight::from_coords(c.to_vec()).unwrap()
    }

    #[test]
    fn frames_are_orthonormal_and_in_hyperplane() {
        for n in 1..=5 {
            let rank = Rank::new(n).unwrap();
            for frame in [Frame::GramSchmidt, Frame::Helmert] {
                let vs = frame.vectors(rank);
                assert_eq!(vs.len(), n);
                for (i, a) in vs.iter().enumerate() {
                    assert!(a.iter().sum::<f64>().abs() < 1e-14);
                    for (j, b) in vs.iter().enumerate() {
                        let dot: f64 = a.iter().zip(b).map(|(p, q)| p * q).sum();
                        assert!((dot - if i == j { 1.0 } else { 0.0 }).abs() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn a1_cosine() {
        let f = OrbitFunction::new(OrbitKind::C, &w(&[1])).unwrap();
        let x = EPoint::new(Rank::new(1).unwrap(), vec![0.07, -0.07]).unwrap();
        let out = laplacian_eigenvalue_check(&f, &x, 1e-3, Frame::GramSchmidt).unwrap();
        assert!(out.relative_error < 1e-4);
    }

    #[test]
    fn constant_function() {
        let f = OrbitFunction::new(OrbitKind::C, &w(&[0, 0])).unwrap();
        let x = EPoint::new(Rank::new(2).unwrap(), vec![0.3, -0.1, -0.2]).unwrap();
        let out = laplacian_eigenvalue_check(&f, &x, 1e-3, Frame::Helmert).unwrap();
        assert!(out.relative_error < 1e-12);
    }

    #[test]
    fn a2_s_at_random_points_and_frame_independence() {
        let mut rng = rng_for(1, 0);
        for frame in [Frame::GramSchmidt, Frame::Helmert] {
            let c = LaplacianCheck::run(OrbitKind::S, &w(&[1, 1]), 1e-3, 10, &mut rng, frame).unwrap();
            assert!(!c.inconclusive);
            assert!(c.max_relative_error < 1e-4, "{c:?}");
            assert!((3.0..=5.0).contains(&c.aggregate_ratio), "{c:?}");
        }
        let f = OrbitFunction::new(OrbitKind::E, &w(&[2, 1])).unwrap();
        let x = EPoint::new(Rank::new(2).unwrap(), vec![0.21, 0.05, -0.26]).unwrap();
        let a = laplacian_eigenvalue_check(&f, &x, 1e-3, Frame::GramSchmidt).unwrap();
        let b = laplacian_eigenvalue_check(&f, &x, 1e-3, Frame::Helmert).unwrap();
        assert!(a.relative_error < 1e-4 && b.relative_error < 1e-4);
    }

    #[test]
    fn vanishing_function_is_inconclusive() {
        let mut rng = rng_for(2, 0);
        let c = LaplacianCheck::run(OrbitKind::S, &w(&[1, 0]), 1e-3, 3, &mut rng, Frame::GramSchmidt).unwrap();
        assert!(c.inconclusive);
        assert_eq!(c.points, 0);
    }
}
