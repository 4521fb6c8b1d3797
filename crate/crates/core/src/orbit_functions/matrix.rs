//! Permanent, determinant and alternating-group sum of small complex
//! matrices. Each quantity has two independent routes so they can be
//! cross-checked.

use num_complex::Complex64;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }
}

/// Visit every permutation of `0..n` together with its parity (true = odd),
/// using Heap's algorithm; each step is one transposition.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize], bool)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut odd = false;
    visit(&perm, odd);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            odd = !odd;
            visit(&perm, odd);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

fn diagonal_product(m: &ComplexMatrix, perm: &[usize]) -> Complex64 {
    perm.iter().enumerate().map(|(i, &j)| m.get(i, j)).product()
}

/// Ryser's inclusion–exclusion formula with Gray-code subset updates,
/// `O(2^n · n)`.
pub fn permanent_ryser(m: &ComplexMatrix) -> Complex64 {
    let n = m.size();
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut row_sums = vec![Complex64::new(0.0, 0.0); n];
    let mut total = Complex64::new(0.0, 0.0);
    let mut gray: u64 = 0;
    for k in 1u64..(1u64 << n) {
        let next = k ^ (k >> 1);
        let changed = (gray ^ next).trailing_zeros() as usize;
        let added = next & (1 << changed) != 0;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if added {
                *s += m.get(i, changed);
            } else {
                *s -= m.get(i, changed);
            }
        }
        gray = next;
        let prod: Complex64 = row_sums.iter().product();
        if gray.count_ones() % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    }
    if n % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Sum over all permutations of the diagonal products.
pub fn permanent_naive(m: &ComplexMatrix) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for_each_permutation(m.size(), |p, _| total += diagonal_product(m, p));
    total
}

/// LU decomposition with partial pivoting.
pub fn determinant_lu(m: &ComplexMatrix) -> Complex64 {
    let n = m.size();
    let mut a = m.data.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot =
            (col..n).max_by(|&r, &s| a[r * n + col].norm().total_cmp(&a[s * n + col].norm())).expect("nonempty range");
        if a[pivot * n + col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for r in col + 1..n {
            let factor = a[r * n + col] / p;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in col..n {
                let v = a[col * n + j];
                a[r * n + j] -= factor * v;
            }
        }
    }
    det
}

/// Leibniz expansion.
pub fn determinant_leibniz(m: &ComplexMatrix) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for_each_permutation(m.size(), |p, odd| {
        let t = diagonal_product(m, p);
        if odd {
            total -= t;
        } else {
            total += t;
        }
    });
    total
}

/// Sum of diagonal products over the alternating group only.
pub fn alternating_sum(m: &ComplexMatrix) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for_each_permutation(m.size(), |p, odd| {
        if !odd {
            total += diagonal_product(m, p);
        }
    });
    total
}
