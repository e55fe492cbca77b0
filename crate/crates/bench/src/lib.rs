//! Benchmark inputs.

use bsato::ExponentMatrix;

/// Products of `k` distinct variables out of `n`.
pub fn products_of(n: usize, k: usize) -> ExponentMatrix {
    let cols = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).map(|i| m >> i & 1).collect())
        .collect();
    ExponentMatrix::from_columns(n, cols).expect("valid matrix")
}

/// `x_i * x_1 ... x_n` for each `i`.
pub fn times_all(n: usize) -> ExponentMatrix {
    let cols = (0..n)
        .map(|i| (0..n).map(|j| 1 + u32::from(i == j)).collect())
        .collect();
    ExponentMatrix::from_columns(n, cols).expect("valid matrix")
}

/// `x^a y, x y^b`.
pub fn two_monomials(a: u32, b: u32) -> ExponentMatrix {
    ExponentMatrix::from_columns(2, vec![vec![a, 1], vec![1, b]]).expect("valid matrix")
}
