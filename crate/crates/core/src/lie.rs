//! Rank-parametrized data of the Lie algebra `A_n`: Cartan matrices, weights
//! in the fundamental-weight (ω) basis, points of the hyperplane
//! `l_1 + … + l_{n+1} = 0` in the orthonormal (e) basis, and the conversions
//! between them.
//!
//! All lattice arithmetic is exact. Weights carry integer ω-coordinates; their
//! e-coordinates are rationals with denominator dividing `n + 1`, so internally
//! they are handled as integer vectors scaled by `n + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default upper bound on the rank; `|W(A_8)| = 9! = 362880`.
pub const DEFAULT_MAX_RANK: usize = 8;

/// Largest rank for which `(n + 1)!` still fits in a `u64`.
pub const HARD_MAX_RANK: usize = 19;

/// Rank `n` of the algebra `A_n` (group `SU(n+1)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DEFAULT_MAX_RANK)
    }

    /// Accept ranks up to `max` instead of [`DEFAULT_MAX_RANK`].
    pub fn with_limit(n: usize, max: usize) -> Result<Self> {
        let max = max.min(HARD_MAX_RANK);
        if n == 0 || n > max {
            return Err(Error::RankOutOfRange { rank: n, max });
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Dimension `n + 1` of the ambient e-space.
    pub fn dim(self) -> usize {
        self.0 + 1
    }

    /// `|W| = (n + 1)!`.
    pub fn weyl_order(self) -> u64 {
        factorial(self.dim())
    }

    fn check_same(self, other: Rank) -> Result<()> {
        if self != other {
            return Err(Error::RankMismatch { left: self.0, right: other.0 });
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0)
    }
}

impl Serialize for Rank {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.0 as u64)
    }
}

pub(crate) fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// An element of the weight lattice `P`, in ω-coordinates.
///
/// The ordering is the monomial order used by the group-ring algorithms:
/// total degree `Σ λ_i` first, ties broken lexicographically on the
/// e-coordinates. It is translation invariant, and the dominant weight is the
/// maximum of its Weyl orbit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    rank: Rank,
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(rank: Rank, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != rank.get() {
            return Err(Error::LengthMismatch { expected: rank.get(), found: coords.len() });
        }
        Ok(Weight { rank, coords })
    }

    /// Build a weight whose rank is the number of coordinates.
    pub fn from_coords(coords: Vec<i64>) -> Result<Self> {
        let rank = Rank::new(coords.len())?;
        Ok(Weight { rank, coords })
    }

    pub fn zero(rank: Rank) -> Self {
        Weight { rank, coords: vec![0; rank.get()] }
    }

    /// Fundamental weight `ω_j`, `1 ≤ j ≤ n`.
    pub fn fundamental(rank: Rank, j: usize) -> Result<Self> {
        if j == 0 || j > rank.get() {
            return Err(Error::IndexOutOfRange { index: j, max: rank.get() });
        }
        let mut coords = vec![0; rank.get()];
        coords[j - 1] = 1;
        Ok(Weight { rank, coords })
    }

    /// `ρ = ω_1 + … + ω_n`.
    pub fn rho(rank: Rank) -> Self {
        Weight { rank, coords: vec![1; rank.get()] }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// In `P⁺`: all coordinates nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// In `P⁺⁺`: all coordinates positive.
    pub fn is_strictly_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c > 0)
    }

    pub fn degree(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// e-coordinates multiplied by `n + 1`, which makes them integral.
    pub fn scaled_e(&self) -> Vec<i64> {
        let n = self.rank.get() as i64;
        let mut out = Vec::with_capacity(self.rank.dim());
        let mut current: i64 = self.coords.iter().enumerate().map(|(i, &c)| (n - i as i64) * c).sum();
        out.push(current);
        for &c in &self.coords {
            current -= (n + 1) * c;
            out.push(current);
        }
        out
    }

    /// Inverse of [`Weight::scaled_e`]. Consecutive differences must be
    /// multiples of `n + 1`.
    pub(crate) fn from_scaled_e(rank: Rank, scaled: &[i64]) -> Self {
        let d = rank.dim() as i64;
        let coords = scaled
            .windows(2)
            .map(|w| {
                debug_assert_eq!((w[0] - w[1]) % d, 0);
                (w[0] - w[1]) / d
            })
            .collect();
        Weight { rank, coords }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.rank.check_same(other.rank)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.rank.check_same(other.rank)?;
        Ok(self - other)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(serializer)
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.scaled_e().cmp(&other.scaled_e()))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// The operators panic on rank mismatch; use `checked_add`/`checked_sub` at
// API boundaries.
impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in weight addition");
        Weight { rank: self.rank, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in weight subtraction");
        Weight { rank: self.rank, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight { rank: self.rank, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

/// A point of the hyperplane `Σ l_k = 0` with exact rational e-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EWeight {
    rank: Rank,
    coords: Vec<Rational64>,
}

impl EWeight {
    pub fn new(rank: Rank, coords: Vec<Rational64>) -> Result<Self> {
        if coords.len() != rank.dim() {
            return Err(Error::LengthMismatch { expected: rank.dim(), found: coords.len() });
        }
        let sum: Rational64 = coords.iter().copied().sum();
        if !sum.is_zero() {
            return Err(Error::OffHyperplane { sum: sum.to_string() });
        }
        Ok(EWeight { rank, coords })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(|q| *q.numer() as f64 / *q.denom() as f64).collect()
    }

    /// The lattice weight with these e-coordinates, if it has integral
    /// ω-coordinates.
    pub fn to_weight(&self) -> Option<Weight> {
        let omega = e_to_omega(self);
        let coords = omega.iter().map(|q| q.is_integer().then(|| q.to_integer())).collect::<Option<Vec<_>>>()?;
        Some(Weight { rank: self.rank, coords })
    }
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational64>,
}

impl RationalMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational64::one() } else { Rational64::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> Rational64 {
        self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.rows });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()))
    }

    pub fn mul_vec(&self, v: &[Rational64]) -> Result<Vec<Rational64>> {
        if self.cols != v.len() {
            return Err(Error::LengthMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| (0..self.cols).map(|k| self.get(i, k) * v[k]).sum()).collect())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Cartan matrix of `A_n`: 2 on the diagonal, −1 on the neighbouring diagonals.
pub fn cartan_matrix(rank: Rank) -> RationalMatrix {
    let n = rank.get();
    RationalMatrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => Rational64::from_integer(2),
        1 => Rational64::from_integer(-1),
        _ => Rational64::zero(),
    })
}

/// Inverse Cartan matrix: `min(i,j)·(n+1−max(i,j)) / (n+1)` (one-based indices).
pub fn cartan_inverse(rank: Rank) -> RationalMatrix {
    let n = rank.get() as i64;
    RationalMatrix::from_fn(rank.get(), rank.get(), |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        Rational64::new(i.min(j) * (n + 1 - i.max(j)), n + 1)
    })
}

/// The `(n+1) × n` matrix `A` with `l = A λ`.
pub fn omega_to_e_matrix(rank: Rank) -> RationalMatrix {
    let n = rank.get() as i64;
    RationalMatrix::from_fn(rank.dim(), rank.get(), |k, i| {
        let (k, i) = (k as i64 + 1, i as i64 + 1);
        let num = if k <= i { n + 1 - i } else { -i };
        Rational64::new(num, n + 1)
    })
}

pub fn omega_to_e(weight: &Weight) -> EWeight {
    let d = weight.rank.dim() as i64;
    EWeight { rank: weight.rank, coords: weight.scaled_e().into_iter().map(|s| Rational64::new(s, d)).collect() }
}

/// `λ_i = l_i − l_{i+1}`. The result is rational when `l` is not a lattice point.
pub fn e_to_omega(point: &EWeight) -> Vec<Rational64> {
    point.coords.windows(2).map(|w| w[0] - w[1]).collect()
}

/// Checked variant of [`e_to_omega`] for raw coordinate vectors.
pub fn e_to_omega_coords(rank: Rank, coords: &[Rational64]) -> Result<Vec<Rational64>> {
    let point = EWeight::new(rank, coords.to_vec())?;
    Ok(e_to_omega(&point))
}

/// Real e-coordinates of the point `x = Σ x_j α_j` given in the α-basis.
pub fn alpha_to_e(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..=n)
        .map(|k| {
            let here = if k < n { x[k] } else { 0.0 };
            let before = if k > 0 { x[k - 1] } else { 0.0 };
            here - before
        })
        .collect()
}

/// α-coordinates of a real point of the hyperplane; `tol` bounds `|Σ x_k|`.
pub fn e_to_alpha(x: &[f64], tol: f64) -> Result<Vec<f64>> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let sum: f64 = x.iter().sum();
    if sum.abs() > tol {
        return Err(Error::OffHyperplane { sum: sum.to_string() });
    }
    let mut acc = 0.0;
    Ok(x[..x.len().saturating_sub(1)]
        .iter()
        .map(|v| {
            acc += v;
            acc
        })
        .collect())
}

/// `⟨λ, μ⟩ = λᵀ 𝔠⁻¹ μ`; the ω-basis Gram matrix is the inverse Cartan matrix
/// because every simple root of `A_n` has squared length 2.
pub fn inner_product(lambda: &Weight, mu: &Weight) -> Result<Rational64> {
    lambda.rank.check_same(mu.rank)?;
    let n = lambda.rank.get() as i64;
    let mut num = 0i64;
    for (i, &a) in lambda.coords.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in mu.coords.iter().enumerate() {
            let (i, j) = (i as i64 + 1, j as i64 + 1);
            num += a * b * i.min(j) * (n + 1 - i.max(j));
        }
    }
    Ok(Rational64::new(num, n + 1))
}

/// `Σ k·λ_k mod (n + 1)`.
pub fn congruence_number(weight: &Weight) -> usize {
    let d = weight.rank.dim() as i64;
    let s: i64 = weight.coords.iter().enumerate().map(|(k, &c)| (k as i64 + 1) * c).sum();
    s.rem_euclid(d) as usize
}

/// Parse a rational like `"2/3"`, `"-1"`.
pub fn parse_rational(s: &str) -> Option<Rational64> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?);
            (b != 0).then(|| Rational64::new(a, b))
        }
        None => s.parse::<i64>().ok().map(Rational64::from_integer),
    }
}
