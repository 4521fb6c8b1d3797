//! Multivariate exponential functions of `S_{n+1}` written as a permanent
//! (`D⁺`), a determinant (`D⁻`) and an alternating-group sum (`D^Alt`) of the
//! matrix `(e^{2πi l_j x_k})`.
//!
//! These are computed directly from the matrix and never through the orbit
//! machinery, so they serve as an independent route to `C`, `S` and `E`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::matrix::{alternating_sum, determinant_lu, permanent_ryser, ComplexMatrix};
use super::EPoint;
use crate::error::{Error, Result};
use crate::lie::EWeight;

/// `M_{jk} = e^{2πi l_j x_k}` for a weakly decreasing `λ = (l_1, …, l_{n+1})`.
pub fn exponential_matrix(lambda: &EWeight, x: &EPoint) -> Result<ComplexMatrix> {
    if lambda.rank() != x.rank() {
        return Err(Error::RankMismatch { left: lambda.rank().get(), right: x.rank().get() });
    }
    if !lambda.is_weakly_decreasing() {
        return Err(Error::Unsorted);
    }
    let l = lambda.to_f64();
    let xs = x.coords();
    Ok(ComplexMatrix::from_fn(l.len(), |j, k| {
        let turns = l[j] * xs[k];
        Complex64::from_polar(1.0, TAU * (turns - turns.round()))
    }))
}

/// `D⁺_λ(x)`, the permanent.
pub fn perm_d_plus(lambda: &EWeight, x: &EPoint) -> Result<Complex64> {
    Ok(permanent_ryser(&exponential_matrix(lambda, x)?))
}

/// `D⁻_λ(x)`, the ordinary determinant.
pub fn det_d_minus(lambda: &EWeight, x: &EPoint) -> Result<Complex64> {
    if lambda.coords().windows(2).any(|w| w[0] == w[1]) {
        // Equal rows.
        exponential_matrix(lambda, x)?;
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(determinant_lu(&exponential_matrix(lambda, x)?))
}

/// `D^Alt_λ(x)`, the sum over even permutations.
pub fn sdet_d_alt(lambda: &EWeight, x: &EPoint) -> Result<Complex64> {
    Ok(alternating_sum(&exponential_matrix(lambda, x)?))
}
