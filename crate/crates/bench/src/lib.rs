//! Fixed inputs shared by the benchmarks.

use weylcheb_core::analysis::{random_alpha_point, rng_for};
use weylcheb_core::{AlphaPoint, Rank, Weight};

/// `(1, 2, 1, 2, …)`: strictly dominant, so its orbit has `(n+1)!` points.
pub fn generic_weight(n: usize) -> Weight {
    let rank = Rank::new(n).expect("rank in range");
    Weight::new(rank, (0..n).map(|k| 1 + (k % 2) as i64).collect()).expect("length matches rank")
}

/// Reproducible α-points for rank `n`.
pub fn points(n: usize, count: usize) -> Vec<AlphaPoint> {
    let rank = Rank::new(n).expect("rank in range");
    let mut rng = rng_for(0xBE7C, n as u64);
    (0..count).map(|_| random_alpha_point(&mut rng, rank)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        assert!(generic_weight(4).is_strictly_dominant());
        assert_eq!(points(3, 5), points(3, 5));
    }
}
