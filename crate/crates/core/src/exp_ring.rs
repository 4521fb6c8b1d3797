//! Exact arithmetic in the group ring `ℤ[P]` of the weight lattice.
//!
//! An [`ExpSum`] is a finite integer combination of formal exponentials
//! `e^{2πi⟨μ, x⟩}`. Products, decomposition into Weyl-orbit sums and exact
//! division (used for Weyl characters) are carried out on these objects with
//! arbitrary-precision coefficients.
//!
//! Leading terms are taken with respect to the order on [`Weight`] (total
//! degree, then e-coordinates lexicographically). That order is translation
//! invariant and puts the dominant weight on top of each Weyl orbit, which is
//! what both the greedy decomposition and the long division rely on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lie::{congruence_number, Rank, Weight};
use crate::orbit_functions::{orbit_for, pairwise_sum, AlphaPoint, OrbitKind};
use crate::weyl;

/// Formal exponential sum with integer coefficients; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpSum {
    rank: Rank,
    terms: BTreeMap<Weight, BigInt>,
}

impl ExpSum {
    pub fn zero(rank: Rank) -> Self {
        ExpSum { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: Rank) -> Self {
        Self::monomial(Weight::zero(rank), BigInt::one())
    }

    pub fn monomial(weight: Weight, coeff: BigInt) -> Self {
        let mut s = Self::zero(weight.rank());
        s.add_term(weight, coeff);
        s
    }

    pub fn from_terms(rank: Rank, terms: impl IntoIterator<Item = (Weight, BigInt)>) -> Result<Self> {
        let mut s = Self::zero(rank);
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch { left: rank.get(), right: w.rank().get() });
            }
            s.add_term(w, c);
        }
        Ok(s)
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

    /// Terms in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, weight: &Weight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn trailing(&self) -> Option<(&Weight, &BigInt)> {
        self.terms.iter().next()
    }

    /// Add `coeff · e^μ`, dropping the entry if it cancels.
    pub fn add_term(&mut self, weight: Weight, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(weight) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ExpSum) -> Result<ExpSum> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExpSum) -> Result<ExpSum> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> ExpSum {
        if factor.is_zero() {
            return Self::zero(self.rank);
        }
        ExpSum { rank: self.rank, terms: self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect() }
    }

    /// Sum of all coefficients (the value at `x = 0`).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Numerical value at `x` in α-coordinates.
    pub fn evaluate(&self, x: &AlphaPoint) -> Result<Complex64> {
        if x.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank.get(), right: x.rank().get() });
        }
        let values: Vec<Complex64> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let turns: f64 = w.coords().iter().zip(x.coords()).map(|(&m, v)| m as f64 * v).sum();
                let c = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(c, std::f64::consts::TAU * (turns - turns.round()))
            })
            .collect();
        Ok(pairwise_sum(&values))
    }

    /// Coefficient constant on every Weyl orbit.
    pub fn is_w_invariant(&self) -> bool {
        self.terms.iter().all(|(w, c)| {
            let (dominant, _) = weyl::dominant_representative(w);
            self.terms.get(&dominant) == Some(c)
        }) && self.terms.keys().filter(|w| w.is_dominant()).all(|d| {
            weyl::orbit(d).map(|o| o.points().iter().all(|p| self.terms.contains_key(&p.weight))).unwrap_or(false)
        })
    }

    fn check_rank(&self, other: &ExpSum) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank.get(), right: other.rank.get() });
        }
        Ok(())
    }

    /// `{"rank": n, "terms": [{"weight": [...], "coeff": c}]}`, terms in
    /// descending order.
    pub fn to_json(&self) -> Value {
        terms_json(self.rank, self.terms.iter().rev())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let (rank, terms) = parse_terms_json(value)?;
        Self::from_terms(rank, terms)
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::Number(c.to_string().parse().expect("integer literal is a JSON number")),
    }
}

fn terms_json<'a>(rank: Rank, terms: impl Iterator<Item = (&'a Weight, &'a BigInt)>) -> Value {
    let terms: Vec<Value> = terms.map(|(w, c)| json!({ "weight": w, "coeff": bigint_json(c) })).collect();
    json!({ "rank": rank.get(), "terms": terms })
}

fn parse_terms_json(value: &Value) -> Result<(Rank, Vec<(Weight, BigInt)>)> {
    let bad = |m: &str| Error::Json(m.to_string());
    let n = value.get("rank").and_then(Value::as_u64).ok_or_else(|| bad("missing rank"))? as usize;
    let rank = Rank::with_limit(n, crate::lie::HARD_MAX_RANK)?;
    let terms = value.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coords = t
            .get("weight")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing weight"))?
            .iter()
            .map(|v| v.as_i64().ok_or_else(|| bad("weight coordinate is not an integer")))
            .collect::<Result<Vec<_>>>()?;
        let coeff = t.get("coeff").ok_or_else(|| bad("missing coeff"))?;
        let coeff: BigInt = match coeff {
            Value::Number(num) => num.to_string().parse().map_err(|_| bad("coeff is not an integer"))?,
            _ => return Err(bad("coeff is not a number")),
        };
        out.push((Weight::new(rank, coords)?, coeff));
    }
    Ok((rank, out))
}

/// Multiplicities of dominant weights in a Weyl-invariant sum: `s = Σ m_λ C_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    rank: Rank,
    terms: BTreeMap<Weight, BigInt>,
}

impl OrbitDecomposition {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dominant weights with multiplicities, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn multiplicity(&self, weight: &Weight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `Σ m_λ C_λ` as an exponential sum.
    pub fn expand(&self) -> ExpSum {
        let mut out = ExpSum::zero(self.rank);
        for (w, m) in &self.terms {
            let orbit = weyl::orbit(w).expect("decomposition keys are dominant");
            for p in orbit.points() {
                out.add_term(p.weight.clone(), m.clone());
            }
        }
        out
    }

    /// `Σ m_λ |W_λ|`, the number of weights counted with multiplicity.
    pub fn total_count(&self) -> BigInt {
        self.terms.iter().map(|(w, m)| m * BigInt::from(weyl::orbit_size(w).expect("dominant"))).sum()
    }

    /// Congruence class shared by every component, if there is one.
    pub fn congruence_class(&self) -> Option<usize> {
        let mut classes = self.terms.keys().map(congruence_number);
        let first = classes.next()?;
        classes.all(|c| c == first).then_some(first)
    }

    pub fn to_json(&self) -> Value {
        terms_json(self.rank, self.terms.iter().rev())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let (rank, terms) = parse_terms_json(value)?;
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w));
            }
            if !c.is_positive() {
                return Err(Error::Json(format!("non-positive multiplicity at {w}")));
            }
            map.insert(w, c);
        }
        Ok(OrbitDecomposition { rank, terms: map })
    }
}

/// The orbit function as a formal sum: coefficients `±1` per orbit point.
pub fn exp_sum(lambda: &Weight, kind: OrbitKind) -> Result<ExpSum> {
    if kind == OrbitKind::S && !lambda.is_strictly_dominant() {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        return Ok(ExpSum::zero(lambda.rank()));
    }
    let orbit = orbit_for(kind, lambda)?;
    let mut out = ExpSum::zero(lambda.rank());
    for (k, p) in orbit.points().iter().enumerate() {
        let coeff = match kind {
            OrbitKind::C => 1,
            OrbitKind::S => p.sign.value(),
            OrbitKind::E if orbit.is_even_point(k) => 1,
            OrbitKind::E => continue,
        };
        out.add_term(p.weight.clone(), BigInt::from(coeff));
    }
    Ok(out)
}

/// Convolution product.
pub fn multiply(a: &ExpSum, b: &ExpSum) -> Result<ExpSum> {
    a.check_rank(b)?;
    let mut out = ExpSum::zero(a.rank);
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            out.add_term(wa + wb, ca * cb);
        }
    }
    Ok(out)
}

/// Greedy extraction of orbit sums from the top: the leading weight of the
/// remainder must be dominant with a positive coefficient.
pub fn decompose_into_c(s: &ExpSum) -> Result<OrbitDecomposition> {
    let mut remainder = s.clone();
    let mut terms = BTreeMap::new();
    while let Some((lead, coeff)) = remainder.leading() {
        let (lead, coeff) = (lead.clone(), coeff.clone());
        if !lead.is_dominant() {
            return Err(Error::NotInvariant { weight: lead, reason: "non-dominant leading term" });
        }
        if !coeff.is_positive() {
            return Err(Error::NotInvariant { weight: lead, reason: "negative multiplicity" });
        }
        let orbit = weyl::orbit(&lead)?;
        for p in orbit.points() {
            remainder.add_term(p.weight.clone(), -&coeff);
        }
        terms.insert(lead, coeff);
    }
    Ok(OrbitDecomposition { rank: s.rank, terms })
}

/// Exact quotient `num / den` in the group ring, by long division on leading
/// terms. Fails if the division leaves a remainder.
pub fn exact_divide(num: &ExpSum, den: &ExpSum) -> Result<ExpSum> {
    num.check_rank(den)?;
    let (den_lead, den_lead_coeff) = den.leading().ok_or(Error::DivisionByZero)?;
    let (den_lead, den_lead_coeff) = (den_lead.clone(), den_lead_coeff.clone());
    let rank = num.rank;
    if num.is_zero() {
        return Ok(ExpSum::zero(rank));
    }

    // Any exact quotient has its support inside this coordinate box
    // (Newton polytopes add under multiplication).
    let n = rank.get();
    let bounds = |s: &ExpSum, k: usize| {
        let it = s.terms.keys().map(|w| w.coords()[k]);
        (it.clone().min().unwrap(), it.max().unwrap())
    };
    let boxes: Vec<(i64, i64)> = (0..n)
        .map(|k| {
            let (nlo, nhi) = bounds(num, k);
            let (dlo, dhi) = bounds(den, k);
            (nlo - dlo, nhi - dhi)
        })
        .collect();

    let mut remainder = num.clone();
    let mut quotient = ExpSum::zero(rank);
    while let Some((lead, coeff)) = remainder.leading() {
        let q_weight = lead - &den_lead;
        let in_box = q_weight.coords().iter().zip(&boxes).all(|(c, (lo, hi))| lo <= c && c <= hi);
        let (q_coeff, rem) = coeff.div_rem(&den_lead_coeff);
        if !in_box || !rem.is_zero() {
            return Err(Error::InexactDivision(lead.clone()));
        }
        for (w, c) in &den.terms {
            remainder.add_term(&q_weight + w, -(&q_coeff * c));
        }
        quotient.add_term(q_weight, q_coeff);
    }

    if multiply(&quotient, den)? != *num {
        let diff = multiply(&quotient, den)?.sub(num)?;
        let w = diff.leading().map(|(w, _)| w.clone()).unwrap_or_else(|| Weight::zero(rank));
        return Err(Error::InexactDivision(w));
    }
    Ok(quotient)
}

/// Weyl character `χ_λ = S_{λ+ρ} / S_ρ` decomposed into C-functions.
pub fn character(lambda: &Weight) -> Result<OrbitDecomposition> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let rho = Weight::rho(lambda.rank());
    let num = exp_sum(&(lambda + &rho), OrbitKind::S)?;
    let den = exp_sum(&rho, OrbitKind::S)?;
    decompose_into_c(&exact_divide(&num, &den)?)
}

/// The character as an exponential sum (before decomposition).
pub fn character_exp_sum(lambda: &Weight) -> Result<ExpSum> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let rho = Weight::rho(lambda.rank());
    exact_divide(&exp_sum(&(lambda + &rho), OrbitKind::S)?, &exp_sum(&rho, OrbitKind::S)?)
}
