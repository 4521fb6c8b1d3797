//! Classical one-variable Chebyshev polynomials `T_m`, `U_m` with exact
//! integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

/// Polynomial in `z`; `coeffs[k]` is the coefficient of `z^k`. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalPoly {
    coeffs: Vec<BigInt>,
}

impl ClassicalPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = ClassicalPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ClassicalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &ClassicalPoly) -> ClassicalPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &ClassicalPoly) -> ClassicalPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> ClassicalPoly {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &ClassicalPoly) -> ClassicalPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiply by `z`.
    pub fn shift(&self) -> ClassicalPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        ClassicalPoly { coeffs }
    }

    pub fn derivative(&self) -> ClassicalPoly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
    }

    pub fn evaluate(&self, z: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for ClassicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_terms(
            f,
            self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                let mono = match k {
                    0 => String::new(),
                    1 => "z".to_string(),
                    _ => format!("z^{k}"),
                };
                (mono, c.clone())
            }),
        )
    }
}

fn three_term(m: usize, first: ClassicalPoly) -> ClassicalPoly {
    let mut prev = ClassicalPoly::one();
    if m == 0 {
        return prev;
    }
    let mut cur = first;
    let two_z = ClassicalPoly::from_i64(&[0, 2]);
    for _ in 1..m {
        let next = two_z.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_0 = 1`, `T_1 = z`, `T_{m+1} = 2z T_m − T_{m−1}`.
pub fn classical_t(m: usize) -> ClassicalPoly {
    three_term(m, ClassicalPoly::from_i64(&[0, 1]))
}

/// `U_0 = 1`, `U_1 = 2z`, `U_{m+1} = 2z U_m − U_{m−1}`.
pub fn classical_u(m: usize) -> ClassicalPoly {
    three_term(m, ClassicalPoly::from_i64(&[0, 2]))
}

/// `U_k` extended to `k ≥ −2` by the recursion run backwards
/// (`U_{−1} = 0`, `U_{−2} = −1`).
fn u_ext(k: i64) -> ClassicalPoly {
    match k {
        -1 => ClassicalPoly::zero(),
        -2 => ClassicalPoly::from_i64(&[-1]),
        _ => classical_u(k as usize),
    }
}

/// Outcome of the classical identities at one `m`, each checked exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalIdentityReport {
    pub m: usize,
    /// `T_m' = m U_{m−1}`
    pub derivative: bool,
    /// `2 T_m = U_m − U_{m−2}`
    pub u_difference: bool,
    /// `T_{m+1} = z T_m − (1 − z²) U_{m−1}`
    pub mixed_shift: bool,
    /// `T_m = U_m − z U_{m−1}`
    pub mixed_difference: bool,
    /// Leading coefficients `2^{m−1}` (`m ≥ 1`) and `2^m`, and parity of the
    /// exponents.
    pub shape: bool,
}

impl ClassicalIdentityReport {
    pub fn passed(&self) -> bool {
        self.derivative && self.u_difference && self.mixed_shift && self.mixed_difference && self.shape
    }
}

pub fn classical_identities_check(m: usize) -> ClassicalIdentityReport {
    let mi = m as i64;
    let t = classical_t(m);
    let u = classical_u(m);
    let u1 = u_ext(mi - 1);
    let derivative = t.derivative() == u1.scale(&BigInt::from(m));
    let u_difference = t.scale(&BigInt::from(2)) == u.sub(&u_ext(mi - 2));
    let one_minus_z2 = ClassicalPoly::from_i64(&[1, 0, -1]);
    let mixed_shift = classical_t(m + 1) == t.shift().sub(&one_minus_z2.mul(&u1));
    let mixed_difference = t == u.sub(&u1.shift());

    let pow2 = |e: usize| BigInt::one() << e;
    let t_lead = if m == 0 { BigInt::one() } else { pow2(m - 1) };
    let parity_ok = |p: &ClassicalPoly| p.coeffs().iter().enumerate().all(|(k, c)| c.is_zero() || (k % 2 == m % 2));
    let shape = t.leading_coeff() == t_lead
        && u.leading_coeff() == pow2(m)
        && t.degree() == Some(m)
        && u.degree() == Some(m)
        && parity_ok(&t)
        && parity_ok(&u);

    ClassicalIdentityReport { m, derivative, u_difference, mixed_shift, mixed_difference, shape }
}
