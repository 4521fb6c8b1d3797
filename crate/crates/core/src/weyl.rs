//! The Weyl group `W(A_n) ≅ S_{n+1}` acting on the hyperplane by permuting
//! e-coordinates.
//!
//! Orbits are generated by enumerating the distinct permutations of the
//! (integer-scaled) e-coordinates of the dominant weight, so no reflection
//! closure is needed and every orbit point is produced exactly once.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{factorial, Weight};

/// Parity sign `(−1)^{p(μ)}` of an orbit point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedOrbitPoint {
    pub weight: Weight,
    pub sign: Sign,
}

/// The Weyl orbit `W_λ` of a dominant weight, with parity signs and the
/// sub-orbit `W^e_λ` of the even subgroup.
///
/// Points are ordered lexicographically descending on e-coordinates, so the
/// dominant weight comes first.
#[derive(Debug, Clone)]
pub struct SignedOrbit {
    dominant: Weight,
    points: Vec<SignedOrbitPoint>,
    even: Vec<bool>,
}

impl SignedOrbit {
    pub fn dominant(&self) -> &Weight {
        &self.dominant
    }

    pub fn points(&self) -> &[SignedOrbitPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points reachable from the dominant weight by the even subgroup.
    pub fn even_points(&self) -> impl Iterator<Item = &Weight> + '_ {
        self.points.iter().zip(&self.even).filter(|(_, &e)| e).map(|(p, _)| &p.weight)
    }

    pub fn is_even_point(&self, index: usize) -> bool {
        self.even[index]
    }

    pub fn even_len(&self) -> usize {
        self.even.iter().filter(|&&e| e).count()
    }

    pub fn stabilizer_order(&self) -> u64 {
        self.dominant.rank().weyl_order() / self.points.len() as u64
    }
}

/// Simple reflection `r_i` on e-coordinates: swaps entries `i` and `i + 1`
/// (one-based).
pub fn reflect<T: Clone>(i: usize, x: &[T]) -> Result<Vec<T>> {
    let max = x.len().saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::ReflectionIndex { index: i, max });
    }
    let mut out = x.to_vec();
    out.swap(i - 1, i);
    Ok(out)
}

/// `r_i` applied to a weight given in ω-coordinates.
pub fn reflect_weight(i: usize, weight: &Weight) -> Result<Weight> {
    let scaled = reflect(i, &weight.scaled_e())?;
    Ok(Weight::from_scaled_e(weight.rank(), &scaled))
}

/// `r_i` applied to a real point given in α-coordinates.
pub fn reflect_alpha(i: usize, x: &[f64]) -> Result<Vec<f64>> {
    let e = crate::lie::alpha_to_e(x);
    let swapped = reflect(i, &e)?;
    crate::lie::e_to_alpha(&swapped, f64::INFINITY)
}

/// Number of pairs `i < j` with `v[i] < v[j]`: the minimal number of adjacent
/// transpositions that sort `v` into weakly decreasing order.
fn strict_inversions(v: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                count += 1;
            }
        }
    }
    count
}

/// The dominant weight in the orbit of `mu`, and the parity of the minimal
/// sorting permutation. With repeated e-coordinates the sign is a convention.
pub fn dominant_representative(mu: &Weight) -> (Weight, Sign) {
    let mut scaled = mu.scaled_e();
    let sign = Sign::from_parity(strict_inversions(&scaled) % 2 == 1);
    scaled.sort_unstable_by(|a, b| b.cmp(a));
    (Weight::from_scaled_e(mu.rank(), &scaled), sign)
}

/// Step to the previous permutation in lexicographic order; returns false
/// after the smallest one.
fn prev_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Orbit of a dominant weight.
pub fn orbit(lambda: &Weight) -> Result<SignedOrbit> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let rank = lambda.rank();
    let start = lambda.scaled_e();

    let mut scaled_points = Vec::new();
    let mut current = start.clone();
    loop {
        scaled_points.push(current.clone());
        if !prev_permutation(&mut current) {
            break;
        }
    }

    // Even subgroup closure: products of two simple reflections generate it.
    let n = rank.get();
    let mut reached: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    reached.insert(start.clone());
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        for i in 0..n {
            for j in 0..n {
                let mut q = p.clone();
                q.swap(i, i + 1);
                q.swap(j, j + 1);
                if reached.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
    }

    let even = scaled_points.iter().map(|p| reached.contains(p)).collect();
    let points = scaled_points
        .iter()
        .map(|p| SignedOrbitPoint {
            weight: Weight::from_scaled_e(rank, p),
            sign: Sign::from_parity(strict_inversions(p) % 2 == 1),
        })
        .collect();
    Ok(SignedOrbit { dominant: lambda.clone(), points, even })
}

/// `(n+1)! / ∏ m_k!` where `m_k` are the multiplicities of repeated
/// e-coordinates.
pub fn orbit_size(lambda: &Weight) -> Result<u64> {
    Ok(lambda.rank().weyl_order() / stabilizer_order(lambda)?)
}

pub fn stabilizer_order(lambda: &Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    // Equal e-coordinates of a dominant weight are exactly the runs of zero
    // ω-coordinates.
    let mut order = 1u64;
    let mut run = 1usize;
    for &c in lambda.coords() {
        if c == 0 {
            run += 1;
        } else {
            order *= factorial(run);
            run = 1;
        }
    }
    Ok(order * factorial(run))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Rank;

    fn w(c: &[i64]) -> Weight {
        Weight::from_coords(c.to_vec()).unwrap()
    }

    /// Orbit by closure under simple reflections in ω-coordinates, using the
    /// Cartan matrix directly: `r_i μ = μ − μ_i α_i`.
    fn closure_orbit(lambda: &Weight) -> HashSet<Vec<i64>> {
        let n = lambda.rank().get();
        let mut seen = HashSet::new();
        let mut stack = vec![lambda.coords().to_vec()];
        while let Some(mu) = stack.pop() {
            if !seen.insert(mu.clone()) {
                continue;
            }
            for i in 0..n {
                let mut next = mu.clone();
                let m = mu[i];
                next[i] -= 2 * m;
                if i > 0 {
                    next[i - 1] += m;
                }
                if i + 1 < n {
                    next[i + 1] += m;
                }
                stack.push(next);
            }
        }
        seen
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(1, &[1, 0, -1]).unwrap(), vec![0, 1, -1]);
        assert_eq!(reflect(2, &[3, 1, 0, -4]).unwrap(), vec![3, 0, 1, -4]);
        let x = [0.1, 0.2, -0.3];
        assert_eq!(reflect(1, &reflect(1, &x).unwrap()).unwrap(), x.to_vec());
        assert!(matches!(reflect(3, &[1, 2, 3]), Err(Error::ReflectionIndex { .. })));
        assert!(reflect(0, &[1, 2]).is_err());
    }

    #[test]
    fn a2_orbits_match_listing() {
        for m in 1..=4 {
            let o = orbit(&w(&[0, m])).unwrap();
            let pts: HashSet<_> = o.points().iter().map(|p| p.weight.coords().to_vec()).collect();
            let expected: HashSet<_> = [vec![0, m], vec![-m, 0], vec![m, -m]].into_iter().collect();
            assert_eq!(pts, expected);
        }
        let (m1, m2) = (2, 3);
        let o = orbit(&w(&[m1, m2])).unwrap();
        let expected = [
            (vec![m1, m2], Sign::Plus),
            (vec![-m1, m1 + m2], Sign::Minus),
            (vec![m1 + m2, -m2], Sign::Minus),
            (vec![-m2, -m1], Sign::Minus),
            (vec![-m1 - m2, m1], Sign::Plus),
            (vec![m2, -m1 - m2], Sign::Plus),
        ];
        assert_eq!(o.len(), 6);
        for (coords, sign) in expected {
            let p = o.points().iter().find(|p| p.weight.coords() == coords.as_slice()).unwrap();
            assert_eq!(p.sign, sign, "sign of {coords:?}");
        }
    }

    #[test]
    fn zero_orbit() {
        for n in 1..=5 {
            let o = orbit(&Weight::zero(Rank::new(n).unwrap())).unwrap();
            assert_eq!(o.len(), 1);
            assert_eq!(o.even_len(), 1);
        }
    }

    #[test]
    fn orbit_rejects_non_dominant() {
        assert!(matches!(orbit(&w(&[1, -1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn dominant_representative_examples() {
        assert_eq!(dominant_representative(&w(&[-1, 1])), (w(&[1, 0]), Sign::Minus));
        assert_eq!(dominant_representative(&w(&[2, 5])), (w(&[2, 5]), Sign::Plus));
        let (m1, m2) = (3, 1);
        assert_eq!(dominant_representative(&w(&[-m1, m1 + m2])), (w(&[m1, m2]), Sign::Minus));
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&w(&[1, 1])).unwrap(), 6);
        assert_eq!(orbit_size(&w(&[0, 0])).unwrap(), 1);
        assert_eq!(orbit_size(&w(&[1, 0, 1])).unwrap(), 12);
        assert_eq!(stabilizer_order(&w(&[1, 0, 1])).unwrap(), 2);
        assert_eq!(orbit_size(&w(&[0, 2, 0, 0])).unwrap(), 10);
    }

    #[test]
    fn orbit_agrees_with_reflection_closure() {
        for lambda in [w(&[1, 0]), w(&[2, 1]), w(&[1, 0, 1]), w(&[0, 2, 0]), w(&[1, 1, 1]), w(&[0, 1, 0, 2])] {
            let o = orbit(&lambda).unwrap();
            let pts: HashSet<_> = o.points().iter().map(|p| p.weight.coords().to_vec()).collect();
            assert_eq!(pts.len(), o.len(), "distinct points");
            assert_eq!(pts, closure_orbit(&lambda));
            assert_eq!(o.len() as u64, orbit_size(&lambda).unwrap());
        }
    }

    #[test]
    fn even_points_rule() {
        // Strictly dominant: even points are exactly the + points.
        let o = orbit(&w(&[1, 2, 1])).unwrap();
        for (k, p) in o.points().iter().enumerate() {
            assert_eq!(o.is_even_point(k), p.sign == Sign::Plus);
        }
        // A stabilizer containing a transposition makes every point even.
        let o = orbit(&w(&[1, 0, 2])).unwrap();
        assert_eq!(o.even_len(), o.len());
    }

    #[test]
    fn points_map_back_to_dominant_with_their_sign() {
        for lambda in [w(&[2, 1]), w(&[1, 1, 2]), w(&[1, 0, 1]), w(&[3, 0])] {
            let o = orbit(&lambda).unwrap();
            for p in o.points() {
                assert_eq!(dominant_representative(&p.weight), (lambda.clone(), p.sign));
            }
        }
    }

    #[test]
    fn dominant_point_first_with_plus_sign() {
        let o = orbit(&w(&[2, 0, 1])).unwrap();
        assert_eq!(o.points()[0].weight, w(&[2, 0, 1]));
        assert_eq!(o.points()[0].sign, Sign::Plus);
    }

    #[test]
    fn reflect_weight_is_simple_reflection() {
        // r_1 (m1, m2) = (-m1, m1 + m2)
        assert_eq!(reflect_weight(1, &w(&[2, 3])).unwrap(), w(&[-2, 5]));
        assert_eq!(reflect_weight(2, &w(&[2, 3])).unwrap(), w(&[5, -3]));
    }

    #[test]
    fn reflect_alpha_in_rank_one_negates() {
        let y = reflect_alpha(1, &[0.3]).unwrap();
        assert!((y[0] + 0.3).abs() < 1e-15);
    }
}
