//! Longest strictly increasing subsequence.

/// Length of the longest strictly increasing subsequence, by patience
/// sorting in O(n log n).
pub fn lis(seq: &[i64]) -> usize {
    let mut tails: Vec<i64> = Vec::new();
    for &x in seq {
        let k = tails.partition_point(|&t| t < x);
        if k == tails.len() {
            tails.push(x);
        } else {
            tails[k] = x;
        }
    }
    tails.len()
}

/// Quadratic dynamic-programming version, kept as an oracle.
pub fn lis_quadratic(seq: &[i64]) -> usize {
    let mut best = vec![1usize; seq.len()];
    for i in 0..seq.len() {
        for j in 0..i {
            if seq[j] < seq[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}
