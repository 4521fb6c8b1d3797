//! Numerical evaluation of the C-, S- and E-orbit functions.
//!
//! With `λ` in ω-coordinates and `x` in α-coordinates the pairing is
//! `⟨μ, x⟩ = Σ μ_j x_j`; with both in e-coordinates it is the Euclidean dot
//! product. Both entry points are provided.
//!
//! Normalization: `C_λ` sums over distinct orbit points, so `C_0 = 1`.
//! Multiply by [`stabilizer_factor`] to get the sum over all of `S_{n+1}`.

mod exp_forms;
pub mod matrix;

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{alpha_to_e, Rank, Weight};
use crate::weyl::{self, dominant_representative, SignedOrbit};

pub use exp_forms::{det_d_minus, exponential_matrix, perm_d_plus, sdet_d_alt};

/// Family of orbit function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OrbitKind {
    C,
    S,
    E,
}

impl OrbitKind {
    pub const ALL: [OrbitKind; 3] = [OrbitKind::C, OrbitKind::S, OrbitKind::E];
}

impl fmt::Display for OrbitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitKind::C => "C",
            OrbitKind::S => "S",
            OrbitKind::E => "E",
        })
    }
}

impl FromStr for OrbitKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C" => Ok(OrbitKind::C),
            "S" => Ok(OrbitKind::S),
            "E" => Ok(OrbitKind::E),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// A real point `x = Σ x_j α_j` in α-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaPoint {
    rank: Rank,
    coords: Vec<f64>,
}

impl AlphaPoint {
    pub fn new(rank: Rank, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != rank.get() {
            return Err(Error::LengthMismatch { expected: rank.get(), found: coords.len() });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(AlphaPoint { rank, coords })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn to_e(&self) -> EPoint {
        EPoint { rank: self.rank, coords: alpha_to_e(&self.coords) }
    }

    /// Simple reflection `r_i x`.
    pub fn reflect(&self, i: usize) -> Result<AlphaPoint> {
        Ok(AlphaPoint { rank: self.rank, coords: weyl::reflect_alpha(i, &self.coords)? })
    }

    pub fn negate(&self) -> AlphaPoint {
        AlphaPoint { rank: self.rank, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// Tolerance on `|Σ x_k|` accepted for real points of the hyperplane.
pub const HYPERPLANE_TOLERANCE: f64 = 1e-9;

/// A real point of the hyperplane `Σ x_k = 0` in e-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct EPoint {
    rank: Rank,
    coords: Vec<f64>,
}

impl EPoint {
    pub fn new(rank: Rank, coords: Vec<f64>) -> Result<Self> {
        if coords.len() != rank.dim() {
            return Err(Error::LengthMismatch { expected: rank.dim(), found: coords.len() });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = coords.iter().sum();
        let scale = coords.iter().fold(1.0f64, |m, c| m.max(c.abs()));
        if sum.abs() > HYPERPLANE_TOLERANCE * scale {
            return Err(Error::OffHyperplane { sum: sum.to_string() });
        }
        Ok(EPoint { rank, coords })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn to_alpha(&self) -> AlphaPoint {
        let coords = crate::lie::e_to_alpha(&self.coords, f64::INFINITY).expect("EPoint coordinates are finite");
        AlphaPoint { rank: self.rank, coords }
    }
}

/// Sum with pairwise splitting to limit rounding growth over large orbits.
pub fn pairwise_sum(values: &[Complex64]) -> Complex64 {
    if values.len() <= 16 {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[inline]
fn unit_phase(turns: f64) -> Complex64 {
    // Reduce to a fraction of a turn before scaling.
    let t = turns - turns.round();
    Complex64::from_polar(1.0, TAU * t)
}

/// An orbit function with its orbit materialized, ready for repeated
/// evaluation.
#[derive(Debug, Clone)]
pub struct OrbitFunction {
    kind: OrbitKind,
    label: Weight,
    /// (ω-coordinates, e-coordinates, coefficient) of each exponential term.
    terms: Vec<(Vec<f64>, Vec<f64>, f64)>,
    vanishes: bool,
}

impl OrbitFunction {
    /// `C` needs `λ ∈ P⁺`; `S` needs `λ ∈ P⁺` and is identically zero on the
    /// chamber walls; `E` accepts `λ ∈ P^e` and sums over the even orbit of
    /// its dominant representative.
    pub fn new(kind: OrbitKind, lambda: &Weight) -> Result<Self> {
        let dominant = match kind {
            OrbitKind::C | OrbitKind::S => {
                if !lambda.is_dominant() {
                    return Err(Error::NotDominant(lambda.clone()));
                }
                lambda.clone()
            }
            OrbitKind::E => even_domain_representative(lambda)?,
        };
        let orbit = weyl::orbit(&dominant)?;
        let vanishes = kind == OrbitKind::S && !dominant.is_strictly_dominant();
        let d = dominant.rank().dim() as f64;
        let terms = if vanishes {
            Vec::new()
        } else {
            orbit
                .points()
                .iter()
                .enumerate()
                .filter(|(k, _)| kind != OrbitKind::E || orbit.is_even_point(*k))
                .map(|(_, p)| {
                    let omega = p.weight.coords().iter().map(|&c| c as f64).collect();
                    let e = p.weight.scaled_e().iter().map(|&c| c as f64 / d).collect();
                    let coeff = if kind == OrbitKind::S { p.sign.value() as f64 } else { 1.0 };
                    (omega, e, coeff)
                })
                .collect()
        };
        Ok(OrbitFunction { kind, label: lambda.clone(), terms, vanishes })
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn label(&self) -> &Weight {
        &self.label
    }

    pub fn rank(&self) -> Rank {
        self.label.rank()
    }

    /// Number of exponential terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for `S_λ` with `λ` on a chamber wall.
    pub fn vanishes_identically(&self) -> bool {
        self.vanishes
    }

    /// Evaluate at raw α-coordinates (length `n`).
    pub fn eval_alpha_coords(&self, x: &[f64]) -> Complex64 {
        let values: Vec<Complex64> = self
            .terms
            .iter()
            .map(|(mu, _, c)| {
                let turns: f64 = mu.iter().zip(x).map(|(m, v)| m * v).sum();
                unit_phase(turns) * *c
            })
            .collect();
        pairwise_sum(&values)
    }

    /// Evaluate at raw e-coordinates (length `n + 1`).
    pub fn eval_e_coords(&self, x: &[f64]) -> Complex64 {
        let values: Vec<Complex64> = self
            .terms
            .iter()
            .map(|(_, l, c)| {
                let turns: f64 = l.iter().zip(x).map(|(m, v)| m * v).sum();
                unit_phase(turns) * *c
            })
            .collect();
        pairwise_sum(&values)
    }

    pub fn eval(&self, x: &AlphaPoint) -> Result<Complex64> {
        check_rank(self.rank(), x.rank())?;
        Ok(self.eval_alpha_coords(&x.coords))
    }

    pub fn eval_e(&self, x: &EPoint) -> Result<Complex64> {
        check_rank(self.rank(), x.rank())?;
        Ok(self.eval_e_coords(&x.coords))
    }
}

fn check_rank(a: Rank, b: Rank) -> Result<()> {
    if a != b {
        return Err(Error::RankMismatch { left: a.get(), right: b.get() });
    }
    Ok(())
}

/// Dominant representative of `λ ∈ P^e = P⁺ ∪ r_i P⁺`.
pub fn even_domain_representative(lambda: &Weight) -> Result<Weight> {
    if lambda.is_dominant() {
        return Ok(lambda.clone());
    }
    let (dominant, _) = dominant_representative(lambda);
    for i in 1..=lambda.rank().get() {
        if weyl::reflect_weight(i, &dominant)? == *lambda {
            return Ok(dominant);
        }
    }
    Err(Error::NotInEvenDomain(lambda.clone()))
}

pub fn is_in_even_domain(lambda: &Weight) -> bool {
    even_domain_representative(lambda).is_ok()
}

/// Value of an S-function together with the wall flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SValue {
    pub value: Complex64,
    /// `λ` lies on a chamber wall, where `S_λ` vanishes identically.
    pub on_wall: bool,
}

pub fn eval_c(lambda: &Weight, x: &AlphaPoint) -> Result<Complex64> {
    OrbitFunction::new(OrbitKind::C, lambda)?.eval(x)
}

pub fn eval_s(lambda: &Weight, x: &AlphaPoint) -> Result<SValue> {
    let f = OrbitFunction::new(OrbitKind::S, lambda)?;
    Ok(SValue { value: f.eval(x)?, on_wall: f.vanishes_identically() })
}

pub fn eval_e(lambda: &Weight, x: &AlphaPoint) -> Result<Complex64> {
    OrbitFunction::new(OrbitKind::E, lambda)?.eval(x)
}

/// Evaluate any kind at a point in α-coordinates.
pub fn evaluate(kind: OrbitKind, lambda: &Weight, x: &AlphaPoint) -> Result<Complex64> {
    OrbitFunction::new(kind, lambda)?.eval(x)
}

/// Evaluate any kind at a point in e-coordinates.
pub fn evaluate_at_e(kind: OrbitKind, lambda: &Weight, x: &EPoint) -> Result<Complex64> {
    OrbitFunction::new(kind, lambda)?.eval_e(x)
}

/// `|W_λ|`, the order of the stabilizer of `λ`: `D⁺_λ = |W_λ| C_λ`.
pub fn stabilizer_factor(lambda: &Weight) -> Result<u64> {
    weyl::stabilizer_order(lambda)
}

/// The orbit used by the given kind (for callers that want the terms).
pub fn orbit_for(kind: OrbitKind, lambda: &Weight) -> Result<SignedOrbit> {
    match kind {
        OrbitKind::E => weyl::orbit(&even_domain_representative(lambda)?),
        _ => weyl::orbit(lambda),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn w(c: &[i64]) -> Weight {
        Weight::from_coords(c.to_vec()).unwrap()
    }

    fn pt(c: &[f64]) -> AlphaPoint {
        AlphaPoint::new(Rank::new(c.len()).unwrap(), c.to_vec()).unwrap()
    }

    #[test]
    fn a1_closed_forms() {
        for m in 0..6i64 {
            for &x in &[0.0, 0.13, 0.25, 0.71] {
                let arg = TAU * m as f64 * x;
                let c = eval_c(&w(&[m]), &pt(&[x])).unwrap();
                let expected_c = if m == 0 { 1.0 } else { 2.0 * arg.cos() };
                assert!(close(c, Complex64::new(expected_c, 0.0), 1e-13));
                let e = eval_e(&w(&[m]), &pt(&[x])).unwrap();
                assert!(close(e, Complex64::from_polar(1.0, arg), 1e-13));
                if m > 0 {
                    let s = eval_s(&w(&[m]), &pt(&[x])).unwrap();
                    assert!(!s.on_wall);
                    assert!(close(s.value, Complex64::new(0.0, 2.0 * arg.sin()), 1e-13));
                }
            }
        }
    }

    #[test]
    fn values_at_origin() {
        for lambda in [w(&[0, 0]), w(&[1, 0]), w(&[2, 1]), w(&[1, 0, 1])] {
            let size = weyl::orbit_size(&lambda).unwrap() as f64;
            let x = pt(&vec![0.0; lambda.rank().get()]);
            assert!(close(eval_c(&lambda, &x).unwrap(), Complex64::new(size, 0.0), 1e-12));
            let s = eval_s(&lambda, &x).unwrap();
            assert!(s.value.norm() < 1e-12);
        }
    }

    #[test]
    fn a2_c_three_term_sum() {
        // W_(1,0) = {(1,0), (-1,1), (0,-1)}
        let x = [1.0 / 3.0, 1.0 / 3.0];
        let expected: Complex64 = [(1.0, 0.0), (-1.0, 1.0), (0.0, -1.0)]
            .iter()
            .map(|(a, b)| Complex64::from_polar(1.0, TAU * (a * x[0] + b * x[1])))
            .sum();
        assert!(close(eval_c(&w(&[1, 0]), &pt(&x)).unwrap(), expected, 1e-14));
    }

    #[test]
    fn a2_s_six_term_sum() {
        let (m1, m2) = (1.0, 1.0);
        let x = [0.137, 0.421];
        let terms = [
            (m1, m2, 1.0),
            (-m1, m1 + m2, -1.0),
            (m1 + m2, -m2, -1.0),
            (-m2, -m1, -1.0),
            (-m1 - m2, m1, 1.0),
            (m2, -m1 - m2, 1.0),
        ];
        let expected: Complex64 =
            terms.iter().map(|(a, b, s)| Complex64::from_polar(*s, TAU * (a * x[0] + b * x[1]))).sum();
        let s = eval_s(&w(&[1, 1]), &pt(&x)).unwrap();
        assert!(close(s.value, expected, 1e-13));
    }

    #[test]
    fn s_on_wall_is_flagged_zero() {
        let s = eval_s(&w(&[2, 0]), &pt(&[0.3, 0.1])).unwrap();
        assert!(s.on_wall);
        assert_eq!(s.value, Complex64::new(0.0, 0.0));
        assert!(matches!(eval_s(&w(&[-1, 2]), &pt(&[0.3, 0.1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn e_is_half_c_plus_s_for_generic() {
        let x = pt(&[0.2113, 0.8123]);
        let lambda = w(&[1, 1]);
        let c = eval_c(&lambda, &x).unwrap();
        let s = eval_s(&lambda, &x).unwrap().value;
        let e = eval_e(&lambda, &x).unwrap();
        assert!(close(e, (c + s) * 0.5, 1e-12));
        assert!(close(eval_e(&w(&[0, 0]), &x).unwrap(), Complex64::new(1.0, 0.0), 1e-15));
    }

    #[test]
    fn e_accepts_reflected_dominant_only() {
        let x = pt(&[0.31, 0.77]);
        assert!(eval_e(&w(&[-1, 3]), &x).is_ok()); // r_1 (1,2)
        assert!(matches!(eval_e(&w(&[-1, -1]), &x), Err(Error::NotInEvenDomain(_))));
    }

    #[test]
    fn alpha_and_e_entry_points_agree() {
        let x = pt(&[0.3, -0.2, 0.55]);
        for kind in OrbitKind::ALL {
            let lambda = w(&[1, 2, 1]);
            let a = evaluate(kind, &lambda, &x).unwrap();
            let b = evaluate_at_e(kind, &lambda, &x.to_e()).unwrap();
            assert!(close(a, b, 1e-12), "{kind}");
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("s".parse::<OrbitKind>().unwrap(), OrbitKind::S);
        assert!("Q".parse::<OrbitKind>().is_err());
    }

    #[test]
    fn epoint_validation() {
        let rank = Rank::new(2).unwrap();
        assert!(EPoint::new(rank, vec![0.5, -0.25, -0.25]).is_ok());
        assert!(EPoint::new(rank, vec![0.5, -0.25, 0.25]).is_err());
        assert!(EPoint::new(rank, vec![0.5, -0.5]).is_err());
        assert!(AlphaPoint::new(rank, vec![f64::NAN, 0.0]).is_err());
    }
}
