//! Fixtures shared by the benchmarks in `benches/`.

use coxcanon::{IntMatrix, PointConfig};

/// A dense `n x n` integer matrix with entries in `[-9, 9]`, fixed by `seed`.
pub fn dense_matrix(n: usize, seed: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n as i64)
        .map(|i| (0..n as i64).map(|j| (i * 7 + j * 13 + seed * 5 + i * j).rem_euclid(19) - 9).collect())
        .collect();
    IntMatrix::from_i64(&rows)
}

/// Points of `P^2` in general position, so the interpolation path is taken.
pub fn general_points(r: usize) -> PointConfig {
    let pts: Vec<Vec<i64>> = (0..r as i64).map(|k| vec![1, k + 2, (k + 2) * (k + 3)]).collect();
    PointConfig::from_i64(2, &pts).expect("distinct points")
}
