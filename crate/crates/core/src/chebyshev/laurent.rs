//! Orbit functions as Laurent polynomials in `y_j = e^{2πi x_j}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde_json::Value;

use super::{Degree, PolyKind};
use crate::error::{Error, Result};
use crate::exp_ring::exp_sum;
use crate::lie::{Rank, Weight};
use crate::orbit_functions::{pairwise_sum, AlphaPoint, OrbitKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YLaurent {
    rank: Rank,
    terms: BTreeMap<Degree, BigInt>,
}

impl YLaurent {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in grlex-descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> + '_ {
        self.terms.iter().rev().map(|(d, c)| (d.as_slice(), c))
    }

    pub fn coeff(&self, exponent: &[i64]) -> BigInt {
        self.terms.get(&Degree::from(exponent.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at arbitrary nonzero `y`.
    pub fn evaluate(&self, y: &[Complex64]) -> Result<Complex64> {
        if y.len() != self.rank.get() {
            return Err(Error::LengthMismatch { expected: self.rank.get(), found: y.len() });
        }
        let values: Vec<Complex64> = self
            .terms
            .iter()
            .map(|(d, c)| {
                let mono: Complex64 = d.as_slice().iter().zip(y).map(|(&e, v)| v.powi(e as i32)).product();
                mono * c.to_f64().unwrap_or(f64::NAN)
            })
            .collect();
        Ok(pairwise_sum(&values))
    }

    /// Value at `y_j = e^{2πi x_j}`.
    pub fn evaluate_on_torus(&self, x: &AlphaPoint) -> Result<Complex64> {
        let y: Vec<Complex64> =
            x.coords().iter().map(|&t| Complex64::from_polar(1.0, std::f64::consts::TAU * (t - t.round()))).collect();
        self.evaluate(&y)
    }

    pub fn to_json(&self, lambda: &Weight, kind: PolyKind) -> Value {
        super::poly_json(self.rank, lambda, kind, self.terms())
    }

    pub fn to_csv(&self) -> String {
        super::poly_csv(self.rank, self.terms())
    }
}

impl fmt::Display for YLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank.get();
        super::write_terms(f, self.terms().map(|(d, c)| (super::monomial_name("y", n, d), c.clone())))
    }
}

/// `P^C`, `P^S` or `P^E`: each orbit exponential `e^{2πi⟨μ,x⟩}` becomes
/// `∏ y_j^{μ_j}`.
pub fn substitute_p(lambda: &Weight, kind: OrbitKind) -> Result<YLaurent> {
    let s = exp_sum(lambda, kind)?;
    let terms = s.terms().map(|(w, c)| (Degree::from(w.coords().to_vec()), c.clone())).collect();
    Ok(YLaurent { rank: lambda.rank(), terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_functions::evaluate;

    fn w(c: &[i64]) -> Weight {
        Weight::from_coords(c.to_vec()).unwrap()
    }

    #[test]
    fn a2_listing() {
        for (m1, m2) in [(1i64, 1i64), (2, 1), (1, 2), (3, 5)] {
            let pc = substitute_p(&w(&[m1, m2]), OrbitKind::C).unwrap();
            let ps = substitute_p(&w(&[m1, m2]), OrbitKind::S).unwrap();
            let listing = [
                ([m1, m2], 1),
                ([-m1, m1 + m2], -1),
                ([m1 + m2, -m2], -1),
                ([-m2, -m1], -1),
                ([-m1 - m2, m1], 1),
                ([m2, -m1 - m2], 1),
            ];
            assert_eq!(pc.len(), 6);
            assert_eq!(ps.len(), 6);
            for (e, s) in listing {
                assert_eq!(pc.coeff(&e), BigInt::from(1));
                assert_eq!(ps.coeff(&e), BigInt::from(s));
            }
        }
        let p0 = substitute_p(&w(&[0]), OrbitKind::C).unwrap();
        assert_eq!(p0.len(), 1);
        assert_eq!(p0.coeff(&[0]), BigInt::from(1));
    }

    #[test]
    fn torus_values_match_orbit_functions() {
        let x = AlphaPoint::new(Rank::new(3).unwrap(), vec![0.11, 0.53, 0.87]).unwrap();
        for kind in OrbitKind::ALL {
            let l = w(&[1, 2, 1]);
            let v = substitute_p(&l, kind).unwrap().evaluate_on_torus(&x).unwrap();
            assert!((v - evaluate(kind, &l, &x).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn e_is_half_sum_termwise() {
        let l = w(&[2, 1]);
        let pc = substitute_p(&l, OrbitKind::C).unwrap();
        let ps = substitute_p(&l, OrbitKind::S).unwrap();
        let pe = substitute_p(&l, OrbitKind::E).unwrap();
        for (d, c) in pc.terms() {
            let twice = BigInt::from(2) * pe.coeff(d);
            assert_eq!(twice, c + ps.coeff(d));
        }
    }

    #[test]
    fn display_and_csv() {
        let p = substitute_p(&w(&[1]), OrbitKind::S).unwrap();
        assert_eq!(p.to_string(), "y - y^-1");
        assert_eq!(p.to_csv(), "d1,coeff\n1,1\n-1,-1\n");
    }
}
