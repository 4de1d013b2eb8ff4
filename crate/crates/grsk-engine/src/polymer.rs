//! Polymer partition functions and gRSK on Young-diagram shaped arrays.

use crate::moves::{log_add_exp, GeomRule};
use crate::GrskError;
use combinat_core::WeightMatrix;
use rsk_engine::local::forward_sweep;

/// Σ over down-right paths (1,1) → (n,N) of ∏ w, by dynamic programming.
pub fn polymer_partition(w: &WeightMatrix<f64>) -> f64 {
    let (n, big_n) = (w.rows(), w.cols());
    let mut dp = vec![vec![0.0; big_n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=big_n {
            let inflow = if i == 1 && j == 1 { 1.0 } else { dp[i - 1][j] + dp[i][j - 1] };
            dp[i][j] = inflow * w[(i, j)];
        }
    }
    dp[n][big_n]
}

/// Log of [`polymer_partition`] from log-weights.
pub fn log_polymer_partition(logw: &WeightMatrix<f64>) -> f64 {
    let (n, big_n) = (logw.rows(), logw.cols());
    let mut dp = vec![vec![f64::NEG_INFINITY; big_n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=big_n {
            let inflow = if i == 1 && j == 1 { 0.0 } else { log_add_exp(dp[i - 1][j], dp[i][j - 1]) };
            dp[i][j] = inflow + logw[(i, j)];
        }
    }
    dp[n][big_n]
}

/// Strict-weak polymer partition function for an m x n matrix, m ≥ n.
///
/// Reading the rows from m up to 1, a path sitting in column j either stays
/// (weight 1/w^row_j) or moves to column j + 1 (weight 1); it starts in
/// column 1 and ends in column n. This is entry (1, n) of
/// E(1/w^m) ⋯ E(1/w^1) with E(x) = diag(x) + superdiagonal ones, and it
/// equals 1/z^n_n.
pub fn strict_weak_partition(w: &WeightMatrix<f64>) -> Result<f64, GrskError> {
    let (m, n) = (w.rows(), w.cols());
    if m < n {
        return Err(GrskError::Unsupported(format!("strict-weak identity needs rows ≥ cols, got {m}x{n}")));
    }
    fn rec(w: &WeightMatrix<f64>, row: usize, col: usize, acc: f64, total: &mut f64) {
        let n = w.cols();
        if row == 0 {
            if col == n {
                *total += acc;
            }
            return;
        }
        // not enough rows left to reach column n
        if n - col > row {
            return;
        }
        rec(w, row - 1, col, acc / w[(row, col)], total);
        if col < n {
            rec(w, row - 1, col + 1, acc, total);
        }
    }
    let mut total = 0.0;
    rec(w, m, 1, 1.0, &mut total);
    Ok(total)
}

/// Staircase array {(i, j): i + j ≤ 2n + 1} filled by `f(i, j)`.
pub fn staircase(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Vec<Vec<f64>> {
    (1..=2 * n).map(|i| (1..=2 * n + 1 - i).map(|j| f(i, j)).collect()).collect()
}

/// Geometric RSK by local moves on an array whose rows have non-increasing
/// lengths.
pub fn grsk_polygonal(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut t = rows.to_vec();
    forward_sweep(&GeomRule, &mut t);
    t
}

/// Outer corners (i, λ_i) of a Young-diagram shaped array, 1-based.
pub fn outer_corners<T>(rows: &[Vec<T>]) -> Vec<(usize, usize)> {
    (0..rows.len())
        .filter(|&k| !rows[k].is_empty() && rows.get(k + 1).map_or(true, |r| r.len() < rows[k].len()))
        .map(|k| (k + 1, rows[k].len()))
        .collect()
}

/// Exhaustive sum over down-right paths from (1,1) ending at any outer
/// corner of the diagram. For the staircase this is the point-to-line
/// partition function.
pub fn flat_partition_brute_force(rows: &[Vec<f64>]) -> f64 {
    let corners = outer_corners(rows);
    fn rec(rows: &[Vec<f64>], corners: &[(usize, usize)], i: usize, j: usize, acc: f64, total: &mut f64) {
        let acc = acc * rows[i - 1][j - 1];
        if corners.contains(&(i, j)) {
            *total += acc;
        }
        if i < rows.len() && rows[i].len() >= j {
            rec(rows, corners, i + 1, j, acc, total);
        }
        if j < rows[i - 1].len() {
            rec(rows, corners, i, j + 1, acc, total);
        }
    }
    let mut total = 0.0;
    rec(rows, &corners, 1, 1, 1.0, &mut total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_weak_two_by_two() {
        let w = WeightMatrix::new(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!((strict_weak_partition(&w).unwrap() - 5.0 / 6.0).abs() < 1e-15);
        let w1 = WeightMatrix::new(1, 1, vec![4.0]).unwrap();
        assert_eq!(strict_weak_partition(&w1).unwrap(), 0.25);
    }

    #[test]
    fn strict_weak_needs_tall_matrix() {
        let w = WeightMatrix::new(1, 2, vec![1.0, 2.0]).unwrap();
        assert!(strict_weak_partition(&w).is_err());
    }

    #[test]
    fn staircase_corners() {
        let s = staircase(2, |_, _| 1.0);
        assert_eq!(s.iter().map(|r| r.len()).collect::<Vec<_>>(), vec![4, 3, 2, 1]);
        assert_eq!(outer_corners(&s), vec![(1, 4), (2, 3), (3, 2), (4, 1)]);
        // all paths of 3 steps: 2^3
        assert_eq!(flat_partition_brute_force(&s), 8.0);
    }

    #[test]
    fn polymer_dp_small() {
        let w = WeightMatrix::new(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(polymer_partition(&w), 20.0);
        assert!((log_polymer_partition(&w.map(|x| x.ln())) - 20f64.ln()).abs() < 1e-14);
    }
}
