//! Recursion relations `X_j · C_a = Σ m_ν C_ν`.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exp_ring::{decompose_into_c, exp_sum, multiply, OrbitDecomposition};
use crate::lie::{Rank, Weight};
use crate::orbit_functions::OrbitKind;

#[derive(Debug, Clone)]
pub struct RecursionRelation {
    pub j: usize,
    pub a: Weight,
    pub rhs: OrbitDecomposition,
}

impl RecursionRelation {
    /// Left-hand side plus the distinct orbits on the right.
    pub fn term_count(&self) -> usize {
        self.rhs.len() + 1
    }

    /// `binom(n+1, j) + 1`: the size of the orbit of `ω_j`, plus one.
    pub fn generic_term_count(&self) -> usize {
        binomial(self.a.rank().dim(), self.j) + 1
    }

    /// Every weight on the right is strictly dominant, so each point of the
    /// orbit of `ω_j` contributes its own orbit with multiplicity one.
    pub fn is_generic(&self) -> bool {
        self.rhs.terms().all(|(w, m)| w.is_strictly_dominant() && *m == BigInt::from(1))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "j": self.j,
            "a": self.a,
            "rhs": self.rhs.to_json(),
            "term_count": self.term_count(),
            "generic_term_count": self.generic_term_count(),
            "generic": self.is_generic(),
        })
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn recursion_relation(j: usize, a: &Weight) -> Result<RecursionRelation> {
    let rank = a.rank();
    if j == 0 || j > rank.get() {
        return Err(Error::IndexOutOfRange { index: j, max: rank.get() });
    }
    let xj = exp_sum(&Weight::fundamental(rank, j)?, OrbitKind::C)?;
    let rhs = decompose_into_c(&multiply(&xj, &exp_sum(a, OrbitKind::C)?)?)?;
    Ok(RecursionRelation { j, a: a.clone(), rhs })
}

/// Observed onset of the generic regime for one `(n, j)`.
#[derive(Debug, Clone, Serialize)]
pub struct GenericThreshold {
    pub rank: usize,
    pub j: usize,
    pub expected_terms: usize,
    /// Smallest `t` such that every `a` with coordinates in `[t, t + width]`
    /// gives a generic relation with the expected term count.
    pub threshold: Option<i64>,
    pub width: i64,
}

/// Scan `t = 0, 1, …, max_t` for the first fully generic box.
pub fn generic_threshold(rank: Rank, j: usize, max_t: i64, width: i64) -> Result<GenericThreshold> {
    let n = rank.get();
    let expected = binomial(n + 1, j) + 1;
    let mut threshold = None;
    'scan: for t in 0..=max_t {
        let mut coords = vec![t; n];
        loop {
            let rel = recursion_relation(j, &Weight::new(rank, coords.clone())?)?;
            if !rel.is_generic() || rel.term_count() != expected {
                continue 'scan;
            }
            // Odometer over the box.
            let mut k = 0;
            while k < n && coords[k] == t + width {
                coords[k] = t;
                k += 1;
            }
            if k == n {
                break;
            }
            coords[k] += 1;
        }
        threshold = Some(t);
        break;
    }
    Ok(GenericThreshold { rank: n, j, expected_terms: expected, threshold, width })
}
