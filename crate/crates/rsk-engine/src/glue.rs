//! Gluing (Z, Z′) into one n x N array and back.
//!
//! t_{i,j} = z^{n−i+j}_{n−i+1} when i − j ≥ n − N, and
//! t_{i,j} = (z^{N+i−j}_{N−j+1})′ when i − j ≤ n − N. The two cases agree on
//! the diagonal i − j = n − N, which carries the common shape.

use combinat_core::{GtPattern, WeightMatrix};

/// Glues Z (depth N) and Z′ (depth n) into an n x N array.
pub fn glue<T: Clone>(z: &GtPattern<T>, zp: &GtPattern<T>) -> WeightMatrix<T> {
    let (n, big_n) = (zp.depth(), z.depth());
    WeightMatrix::from_fn(n, big_n, |i, j| {
        if i as isize - j as isize >= n as isize - big_n as isize {
            z.get(n - i + j, n - i + 1).clone()
        } else {
            zp.get(big_n + i - j, big_n - j + 1).clone()
        }
    })
}

/// Splits a glued n x N array into (Z, Z′).
pub fn unglue<T: Clone>(t: &WeightMatrix<T>) -> (GtPattern<T>, GtPattern<T>) {
    let (n, big_n) = (t.rows(), t.cols());
    let width = n.min(big_n);
    let z_rows: Vec<Vec<T>> =
        (1..=big_n).map(|k| (1..=k.min(n)).map(|m| t[(n - m + 1, k - m + 1)].clone()).collect()).collect();
    let zp_rows: Vec<Vec<T>> =
        (1..=n).map(|k| (1..=k.min(big_n)).map(|m| t[(k - m + 1, big_n - m + 1)].clone()).collect()).collect();
    (
        GtPattern::from_rows_with_width(z_rows, width).expect("glued layout"),
        GtPattern::from_rows_with_width(zp_rows, width).expect("glued layout"),
    )
}
