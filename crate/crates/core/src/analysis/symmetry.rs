//! Behaviour of orbit functions under simple reflections of the argument
//! and of the label.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::random_alpha_point;
use crate::error::Result;
use crate::lie::Weight;
use crate::orbit_functions::{OrbitFunction, OrbitKind};
use crate::weyl;

/// Largest deviations over all trials and reflections, each divided by the
/// orbit size.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryReport {
    pub lambda: Weight,
    pub trials: usize,
    pub orbit_size: usize,
    /// `C_λ(r_i x) = C_λ(x)`
    pub c_invariance: f64,
    /// `C_{r_i λ}` and `C_λ` have the same exponentials.
    pub c_label: f64,
    /// `S_λ(r_i x) = −S_λ(x)`
    pub s_sign_flip: f64,
    /// `E_{r_i λ}(x) = E_λ(x)`
    pub e_label: f64,
    /// `E_λ(r_i x) = C_λ(x) − E_λ(x)` when the even orbit is half the orbit,
    /// `E_λ(r_i x) = E_λ(x)` when it is all of it.
    pub e_reflection: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl SymmetryReport {
    pub fn max_deviation(&self) -> f64 {
        [self.c_invariance, self.c_label, self.s_sign_flip, self.e_label, self.e_reflection]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Checks at `trials` random points and every simple reflection. `tolerance`
/// applies to deviations divided by the orbit size.
pub fn symmetry_suite(lambda: &Weight, trials: usize, tolerance: f64, rng: &mut impl Rng) -> Result<SymmetryReport> {
    let rank = lambda.rank();
    let c = OrbitFunction::new(OrbitKind::C, lambda)?;
    let s = OrbitFunction::new(OrbitKind::S, lambda)?;
    let e = OrbitFunction::new(OrbitKind::E, lambda)?;
    let orbit = weyl::orbit(lambda)?;
    let all_even = orbit.even_len() == orbit.len();
    let scale = orbit.len() as f64;

    let reflected: Vec<(OrbitFunction, OrbitFunction)> = (1..=rank.get())
        .map(|i| {
            let r = weyl::reflect_weight(i, lambda)?;
            Ok((orbit_sum_at(&r)?, OrbitFunction::new(OrbitKind::E, &r)?))
        })
        .collect::<Result<_>>()?;

    let mut report = SymmetryReport {
        lambda: lambda.clone(),
        trials,
        orbit_size: orbit.len(),
        c_invariance: 0.0,
        c_label: 0.0,
        s_sign_flip: 0.0,
        e_label: 0.0,
        e_reflection: 0.0,
        tolerance,
        passed: false,
    };
    let dev = |a: Complex64, b: Complex64| (a - b).norm() / scale;
    for _ in 0..trials {
        let x = random_alpha_point(rng, rank);
        let (cx, sx, ex) = (c.eval(&x)?, s.eval(&x)?, e.eval(&x)?);
        for (k, (c_r, e_r)) in reflected.iter().enumerate() {
            let rx = x.reflect(k + 1)?;
            report.c_invariance = report.c_invariance.max(dev(c.eval(&rx)?, cx));
            report.c_label = report.c_label.max(dev(c_r.eval(&x)?, cx));
            report.s_sign_flip = report.s_sign_flip.max(dev(s.eval(&rx)?, -sx));
            report.e_label = report.e_label.max(dev(e_r.eval(&x)?, ex));
            let expected = if all_even { ex } else { cx - ex };
            report.e_reflection = report.e_reflection.max(dev(e.eval(&rx)?, expected));
        }
    }
    report.passed = report.max_deviation() < tolerance;
    Ok(report)
}

/// `Σ_{μ ∈ W(r_i λ)} e^{2πi⟨μ,x⟩}` built from the reflected label itself:
/// its dominant representative is found by sorting, independently of `λ`.
fn orbit_sum_at(label: &Weight) -> Result<OrbitFunction> {
    let (dominant, _) = weyl::dominant_representative(label);
    OrbitFunction::new(OrbitKind::C, &dominant)
}
