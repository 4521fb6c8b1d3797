//! Multivariate Chebyshev-like polynomials of `A_n`.
//!
//! `T_λ = C_λ` and `U_λ = S_{λ+ρ} / S_ρ` are written as integer polynomials
//! in the fundamental variables `X_j = C_{ω_j}`. The construction runs by
//! induction: for `λ = ω_j + μ`,
//!
//! ```text
//! C_λ = X_j · C_μ − Σ_{ν ≠ λ} m_ν C_ν
//! ```
//!
//! where the `m_ν` come from decomposing `X_j · C_μ` in the group ring.

mod classical;
mod laurent;
mod recursion;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exp_ring::{bigint_json, character, decompose_into_c, exp_sum, multiply};
use crate::lie::{congruence_number, Rank, Weight};
use crate::orbit_functions::{pairwise_sum, OrbitKind};

pub use classical::{classical_identities_check, classical_t, classical_u, ClassicalIdentityReport, ClassicalPoly};
pub use laurent::{substitute_p, YLaurent};
pub use recursion::{binomial, generic_threshold, recursion_relation, GenericThreshold, RecursionRelation};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Degree(Vec<i64>);

impl Degree {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl From<Vec<i64>> for Degree {
    fn from(v: Vec<i64>) -> Self {
        Degree(v)
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Which polynomial a serialized term list represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PolyKind {
    T,
    U,
    PC,
    PS,
    PE,
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolyKind::T => "T",
            PolyKind::U => "U",
            PolyKind::PC => "PC",
            PolyKind::PS => "PS",
            PolyKind::PE => "PE",
        })
    }
}

impl FromStr for PolyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T" => Ok(PolyKind::T),
            "U" => Ok(PolyKind::U),
            "PC" => Ok(PolyKind::PC),
            "PS" => Ok(PolyKind::PS),
            "PE" => Ok(PolyKind::PE),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// Integer polynomial in `X_1, …, X_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPolynomial {
    rank: Rank,
    terms: BTreeMap<Degree, BigInt>,
}

impl XPolynomial {
    pub fn zero(rank: Rank) -> Self {
        XPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: Rank) -> Self {
        let mut p = Self::zero(rank);
        p.add_term(vec![0; rank.get()], BigInt::one());
        p
    }

    /// The variable `X_j` (one-based).
    pub fn variable(rank: Rank, j: usize) -> Result<Self> {
        if j == 0 || j > rank.get() {
            return Err(Error::IndexOutOfRange { index: j, max: rank.get() });
        }
        let mut d = vec![0; rank.get()];
        d[j - 1] = 1;
        let mut p = Self::zero(rank);
        p.add_term(d, BigInt::one());
        Ok(p)
    }

    pub fn from_terms(rank: Rank, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Result<Self> {
        let mut p = Self::zero(rank);
        for (d, c) in terms {
            if d.len() != rank.get() {
                return Err(Error::LengthMismatch { expected: rank.get(), found: d.len() });
            }
            if d.iter().any(|&e| e < 0) {
                return Err(Error::Json(format!("negative exponent in {d:?}")));
            }
            p.add_term(d, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, d: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Degree(d);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in grlex-descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> + '_ {
        self.terms.iter().rev().map(|(d, c)| (d.as_slice(), c))
    }

    pub fn coeff(&self, degree: &[i64]) -> BigInt {
        self.terms.get(&Degree(degree.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(Degree::total)
    }

    pub fn add(&self, other: &XPolynomial) -> XPolynomial {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.0.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &XPolynomial) -> XPolynomial {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> XPolynomial {
        let mut out = Self::zero(self.rank);
        for (d, c) in &self.terms {
            out.add_term(d.0.clone(), c * factor);
        }
        out
    }

    pub fn mul(&self, other: &XPolynomial) -> XPolynomial {
        let mut out = Self::zero(self.rank);
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                let d = da.0.iter().zip(&db.0).map(|(a, b)| a + b).collect();
                out.add_term(d, ca * cb);
            }
        }
        out
    }

    /// Multiply by `X_j` (one-based).
    pub fn mul_var(&self, j: usize) -> XPolynomial {
        let mut out = Self::zero(self.rank);
        for (d, c) in &self.terms {
            let mut d = d.0.clone();
            d[j - 1] += 1;
            out.add_term(d, c.clone());
        }
        out
    }

    /// Value at `X_j = values[j − 1]`.
    pub fn evaluate(&self, values: &[Complex64]) -> Result<Complex64> {
        if values.len() != self.rank.get() {
            return Err(Error::LengthMismatch { expected: self.rank.get(), found: values.len() });
        }
        let terms: Vec<Complex64> = self
            .terms
            .iter()
            .map(|(d, c)| {
                let mono: Complex64 = d.0.iter().zip(values).map(|(&e, v)| v.powi(e as i32)).product();
                mono * c.to_f64().unwrap_or(f64::NAN)
            })
            .collect();
        Ok(pairwise_sum(&terms))
    }

    /// Congruence classes `Σ j d_j mod (n+1)` of the monomials present.
    pub fn congruence_classes(&self) -> BTreeSet<usize> {
        let m = self.rank.dim() as i64;
        self.terms
            .keys()
            .map(|d| d.0.iter().enumerate().map(|(k, &e)| (k as i64 + 1) * e).sum::<i64>().rem_euclid(m) as usize)
            .collect()
    }

    /// Rank-one polynomial under `X = 2z`.
    pub fn to_classical(&self) -> Result<ClassicalPoly> {
        if self.rank.get() != 1 {
            return Err(Error::RankMismatch { left: self.rank.get(), right: 1 });
        }
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (d, c) in &self.terms {
            let k = d.0[0] as usize;
            coeffs[k] = c << k;
        }
        Ok(ClassicalPoly::new(coeffs))
    }

    pub fn to_json(&self, lambda: &Weight, kind: PolyKind) -> Value {
        poly_json(self.rank, lambda, kind, self.terms())
    }

    pub fn to_csv(&self) -> String {
        poly_csv(self.rank, self.terms())
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank.get();
        write_terms(f, self.terms().map(|(d, c)| (monomial_name("X", n, d), c.clone())))
    }
}

pub(crate) fn monomial_name(var: &str, n: usize, d: &[i64]) -> String {
    let parts: Vec<String> = d
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(k, &e)| {
            let name = if n == 1 { var.to_string() } else { format!("{var}{}", k + 1) };
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    parts.join("*")
}

/// Writes `a - b + c` with unit coefficients suppressed on non-constant
/// monomials.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, BigInt)>) -> fmt::Result {
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn poly_json<'a>(
    rank: Rank,
    lambda: &Weight,
    kind: PolyKind,
    terms: impl Iterator<Item = (&'a [i64], &'a BigInt)>,
) -> Value {
    let terms: Vec<Value> = terms.map(|(d, c)| json!({ "deg": d, "coeff": bigint_json(c) })).collect();
    json!({
        "algebra": format!("A{}", rank.get()),
        "lambda": lambda,
        "kind": kind.to_string(),
        "terms": terms,
    })
}

pub(crate) fn poly_csv<'a>(rank: Rank, terms: impl Iterator<Item = (&'a [i64], &'a BigInt)>) -> String {
    let mut out = String::new();
    for k in 1..=rank.get() {
        out.push_str(&format!("d{k},"));
    }
    out.push_str("coeff\n");
    for (d, c) in terms {
        for e in d {
            out.push_str(&format!("{e},"));
        }
        out.push_str(&format!("{c}\n"));
    }
    out
}

/// Which fundamental weight to peel off when `λ` has several nonzero
/// coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitStrategy {
    SmallestIndex,
    LargestIndex,
}

/// Memoized construction of `T_λ` for one rank. Not shared between threads;
/// build one per thread if needed.
#[derive(Debug, Clone)]
pub struct PolynomialBuilder {
    rank: Rank,
    strategy: SplitStrategy,
    memo: HashMap<Weight, XPolynomial>,
}

impl PolynomialBuilder {
    pub fn new(rank: Rank) -> Self {
        Self::with_strategy(rank, SplitStrategy::SmallestIndex)
    }

    pub fn with_strategy(rank: Rank, strategy: SplitStrategy) -> Self {
        PolynomialBuilder { rank, strategy, memo: HashMap::new() }
    }

    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    pub fn poly_t(&mut self, lambda: &Weight) -> Result<XPolynomial> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank.get(), right: lambda.rank().get() });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        if let Some(p) = self.memo.get(lambda) {
            return Ok(p.clone());
        }
        let p = if lambda.is_zero() {
            XPolynomial::one(self.rank)
        } else {
            let nonzero = lambda.coords().iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, _)| k + 1);
            let j = match self.strategy {
                SplitStrategy::SmallestIndex => nonzero.min(),
                SplitStrategy::LargestIndex => nonzero.max(),
            }
            .expect("nonzero dominant weight");
            let omega = Weight::fundamental(self.rank, j)?;
            let mu = lambda - &omega;
            if mu.is_zero() {
                XPolynomial::variable(self.rank, j)?
            } else {
                let product = multiply(&exp_sum(&omega, OrbitKind::C)?, &exp_sum(&mu, OrbitKind::C)?)?;
                let dec = decompose_into_c(&product)?;
                debug_assert_eq!(dec.multiplicity(lambda), BigInt::one());
                let mut p = self.poly_t(&mu)?.mul_var(j);
                for (nu, m) in dec.terms() {
                    if nu != lambda {
                        p = p.sub(&self.poly_t(nu)?.scale(m));
                    }
                }
                p
            }
        };
        self.memo.insert(lambda.clone(), p.clone());
        Ok(p)
    }

    /// `U_λ = Σ_ν m_ν T_ν` over the dominant weights of the character.
    pub fn poly_u(&mut self, lambda: &Weight) -> Result<XPolynomial> {
        let chi = character(lambda)?;
        let mut out = XPolynomial::zero(self.rank);
        for (nu, m) in chi.terms() {
            out = out.add(&self.poly_t(nu)?.scale(m));
        }
        Ok(out)
    }
}

pub fn poly_t(lambda: &Weight) -> Result<XPolynomial> {
    PolynomialBuilder::new(lambda.rank()).poly_t(lambda)
}

pub fn poly_u(lambda: &Weight) -> Result<XPolynomial> {
    PolynomialBuilder::new(lambda.rank()).poly_u(lambda)
}

/// Values of the fundamental variables `X_j = C_{ω_j}(x)`.
pub fn fundamental_values(x: &crate::orbit_functions::AlphaPoint) -> Result<Vec<Complex64>> {
    let rank = x.rank();
    (1..=rank.get()).map(|j| crate::orbit_functions::eval_c(&Weight::fundamental(rank, j)?, x)).collect()
}

/// Congruence class of every monomial of `T_λ` equals that of `λ`.
pub fn is_congruence_homogeneous(poly: &XPolynomial, lambda: &Weight) -> bool {
    let classes = poly.congruence_classes();
    classes.len() <= 1 && classes.iter().all(|&c| c == congruence_number(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit_functions::{eval_c, AlphaPoint};

    fn w(c: &[i64]) -> Weight {
        Weight::from_coords(c.to_vec()).unwrap()
    }

    fn x1(coeffs: &[i64]) -> XPolynomial {
        let rank = Rank::new(1).unwrap();
        XPolynomial::from_terms(rank, coeffs.iter().enumerate().map(|(k, &c)| (vec![k as i64], BigInt::from(c))))
            .unwrap()
    }

    #[test]
    fn a1_listed_polynomials() {
        assert_eq!(poly_t(&w(&[0])).unwrap(), x1(&[1]));
        assert_eq!(poly_t(&w(&[1])).unwrap(), x1(&[0, 1]));
        assert_eq!(poly_t(&w(&[2])).unwrap(), x1(&[-2, 0, 1]));
        assert_eq!(poly_t(&w(&[3])).unwrap(), x1(&[0, -3, 0, 1]));
        assert_eq!(poly_t(&w(&[4])).unwrap(), x1(&[2, 0, -4, 0, 1]));
        assert_eq!(poly_u(&w(&[0])).unwrap(), x1(&[1]));
        assert_eq!(poly_u(&w(&[2])).unwrap(), x1(&[-1, 0, 1]));
        assert_eq!(poly_u(&w(&[3])).unwrap(), x1(&[0, -2, 0, 1]));
        assert_eq!(poly_u(&w(&[4])).unwrap(), x1(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn a1_classical_reduction() {
        let mut b = PolynomialBuilder::new(Rank::new(1).unwrap());
        for m in 0..=20usize {
            let t = b.poly_t(&w(&[m as i64])).unwrap().to_classical().unwrap();
            let expected = if m == 0 { classical_t(0) } else { classical_t(m).scale(&BigInt::from(2)) };
            assert_eq!(t, expected, "T m={m}");
            let u = b.poly_u(&w(&[m as i64])).unwrap().to_classical().unwrap();
            assert_eq!(u, classical_u(m), "U m={m}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(poly_t(&w(&[4])).unwrap().to_string(), "X^4 - 4X^2 + 2");
        assert_eq!(poly_t(&w(&[1, 1])).unwrap().to_string(), "X1*X2 - 3");
        assert_eq!(XPolynomial::zero(Rank::new(2).unwrap()).to_string(), "0");
    }

    #[test]
    fn a2_small_cases() {
        assert_eq!(poly_t(&w(&[2, 0])).unwrap().to_string(), "X1^2 - 2X2");
        assert_eq!(poly_u(&w(&[1, 1])).unwrap().to_string(), "X1*X2 - 1");
        let chi = poly_u(&w(&[1, 1])).unwrap();
        assert_eq!(
            chi,
            poly_t(&w(&[1, 1])).unwrap().add(&XPolynomial::one(Rank::new(2).unwrap()).scale(&BigInt::from(2)))
        );
    }

    #[test]
    fn a2_product_identity() {
        let rank = Rank::new(2).unwrap();
        let mut b = PolynomialBuilder::new(rank);
        let lhs = b.poly_t(&w(&[1, 0])).unwrap().mul(&b.poly_t(&w(&[0, 1])).unwrap());
        let dec = decompose_into_c(
            &multiply(&exp_sum(&w(&[1, 0]), OrbitKind::C).unwrap(), &exp_sum(&w(&[0, 1]), OrbitKind::C).unwrap())
                .unwrap(),
        )
        .unwrap();
        let mut rhs = XPolynomial::zero(rank);
        for (nu, m) in dec.terms() {
            rhs = rhs.add(&b.poly_t(nu).unwrap().scale(m));
        }
        assert_eq!(lhs, rhs);
        assert_eq!(dec.multiplicity(&w(&[0, 0])), BigInt::from(3));
    }

    #[test]
    fn split_strategies_agree() {
        for n in 2..=3 {
            let rank = Rank::new(n).unwrap();
            let mut a = PolynomialBuilder::with_strategy(rank, SplitStrategy::SmallestIndex);
            let mut b = PolynomialBuilder::with_strategy(rank, SplitStrategy::LargestIndex);
            let mut coords = vec![0i64; n];
            loop {
                let l = Weight::new(rank, coords.clone()).unwrap();
                assert_eq!(a.poly_t(&l).unwrap(), b.poly_t(&l).unwrap(), "{l}");
                let mut k = 0;
                while k < n && coords[k] == 2 {
                    coords[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
                coords[k] += 1;
            }
        }
    }

    #[test]
    fn evaluation_consistency() {
        let x = AlphaPoint::new(Rank::new(3).unwrap(), vec![0.123, 0.456, 0.789]).unwrap();
        let vals = fundamental_values(&x).unwrap();
        let mut b = PolynomialBuilder::new(x.rank());
        for l in [w(&[1, 2, 0]), w(&[2, 1, 3]), w(&[0, 3, 1])] {
            let p = b.poly_t(&l).unwrap();
            let expected = eval_c(&l, &x).unwrap();
            assert!((p.evaluate(&vals).unwrap() - expected).norm() <= 1e-9 * expected.norm().max(1.0));
            assert!(is_congruence_homogeneous(&p, &l));
        }
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("pc".parse::<PolyKind>().unwrap(), PolyKind::PC);
        assert!("X".parse::<PolyKind>().is_err());
    }

    #[test]
    fn json_and_csv() {
        let l = w(&[4]);
        let p = poly_t(&l).unwrap();
        let v = p.to_json(&l, PolyKind::T);
        assert_eq!(
            v,
            json!({"algebra":"A1","lambda":[4],"kind":"T","terms":[
                {"deg":[4],"coeff":1},{"deg":[2],"coeff":-4},{"deg":[0],"coeff":2}]})
        );
        assert_eq!(p.to_csv(), "d1,coeff\n4,1\n2,-4\n0,2\n");
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(poly_t(&w(&[1, -1])), Err(Error::NotDominant(_))));
        assert!(matches!(poly_u(&w(&[-1])), Err(Error::NotDominant(_))));
    }
}
