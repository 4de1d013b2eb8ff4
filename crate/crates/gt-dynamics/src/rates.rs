//! Rate tables and jump rules.

use combinat_core::GtPattern;
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rate {
    pub level: usize,
    pub index: usize,
    pub rate: f64,
}

fn get(z: &GtPattern<i64>, i: usize, j: usize) -> Option<i64> {
    z.try_get(i, j).copied()
}

/// Moves z^i_j one step right and lets the move trickle down: at every
/// level `push(z, i, j)` (evaluated before the move) decides whether the
/// next level moves z^{i+1}_j (push) or z^{i+1}_{j+1} (pull).
fn cascade(z: &mut GtPattern<i64>, mut i: usize, mut j: usize, mut push: impl FnMut(&GtPattern<i64>, usize, usize) -> bool) {
    let depth = z.depth();
    loop {
        let down = i < depth && push(z, i, j);
        z.set(i, j, z.get(i, j) + 1);
        if i == depth {
            return;
        }
        if !down {
            j += 1;
        }
        i += 1;
    }
}

/// Only the left edge z^i_1 jumps on its own, at rate x_i.
pub fn poisson_rsk_rates(z: &GtPattern<i64>, x: &[f64]) -> Vec<Rate> {
    (1..=z.depth()).map(|i| Rate { level: i, index: 1, rate: x[i - 1] }).collect()
}

/// Jump of z^i_1 with the RSK cascade: push when z^i_j = z^{i+1}_j, pull
/// otherwise.
pub fn poisson_rsk_jump(z: &mut GtPattern<i64>, level: usize) {
    cascade(z, level, 1, |z, i, j| z.get(i, j) == z.get(i + 1, j));
}

/// R_j(z^i; z^{i+1}) = q^{z^{i+1}_j − z^i_j} (1 − q^{z^i_{j−1} − z^{i+1}_j}) / (1 − q^{z^i_{j−1} − z^i_j}),
/// the second factor dropped for j = 1 and R = 1 when z^i_j = z^{i+1}_j.
pub fn qrsk_push_probability(z: &GtPattern<i64>, i: usize, j: usize, q: f64) -> f64 {
    let (a, b) = (*z.get(i, j), *z.get(i + 1, j));
    if a == b {
        return 1.0;
    }
    let mut r = q.powi((b - a) as i32);
    if let Some(c) = get(z, i, j.wrapping_sub(1)) {
        r *= (1.0 - q.powi((c - b) as i32)) / (1.0 - q.powi((c - a) as i32));
    }
    r
}

/// Moves z^i_j and runs the random q-RSK cascade below it.
pub fn qrsk_step<R: Rng + ?Sized>(z: &GtPattern<i64>, i: usize, j: usize, q: f64, rng: &mut R) -> GtPattern<i64> {
    let mut out = z.clone();
    cascade(&mut out, i, j, |z, i, j| {
        let r = qrsk_push_probability(z, i, j, q);
        r >= 1.0 || rng.random::<f64>() < r
    });
    out
}

/// x_k (1 − q^{z^{k−1}_{j−1} − z^k_j})(1 − q^{z^k_j − z^k_{j+1} + 1}) / (1 − q^{z^k_j − z^{k−1}_j + 1}),
/// factors with entries outside the pattern omitted.
pub fn qwhittaker_rate(z: &GtPattern<i64>, x: &[f64], q: f64, k: usize, j: usize) -> f64 {
    let zk = *z.get(k, j);
    let mut r = x[k - 1];
    if let Some(a) = get(z, k - 1, j - 1) {
        r *= 1.0 - q.powi((a - zk) as i32);
    }
    if let Some(b) = get(z, k, j + 1) {
        r *= 1.0 - q.powi((zk - b + 1) as i32);
    }
    if let Some(c) = get(z, k - 1, j) {
        r /= 1.0 - q.powi((zk - c + 1) as i32);
    }
    r
}

pub fn qwhittaker_rates(z: &GtPattern<i64>, x: &[f64], q: f64) -> Vec<Rate> {
    let mut out = Vec::new();
    for k in 1..=z.depth() {
        for j in 1..=z.row_len(k) {
            out.push(Rate { level: k, index: j, rate: qwhittaker_rate(z, x, q, k, j) });
        }
    }
    out
}

/// Moves z^k_j and pushes the string z^{k+1}_j = z^{k+2}_j = … equal to it.
pub fn qwhittaker_jump(z: &mut GtPattern<i64>, k: usize, j: usize) {
    let v = *z.get(k, j);
    let mut i = k;
    while i <= z.depth() && *z.get(i, j) == v {
        z.set(i, j, v + 1);
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(rows: Vec<Vec<i64>>) -> GtPattern<i64> {
        GtPattern::from_rows(rows).unwrap()
    }

    #[test]
    fn rsk_push_and_pull() {
        let mut z = pat(vec![vec![1], vec![1, 0]]);
        poisson_rsk_jump(&mut z, 1);
        assert_eq!(z.rows(), vec![vec![2], vec![2, 0]]);
        let mut z = pat(vec![vec![1], vec![2, 0]]);
        poisson_rsk_jump(&mut z, 1);
        assert_eq!(z.rows(), vec![vec![2], vec![2, 1]]);
    }

    #[test]
    fn qrsk_third() {
        // rows i and i+1 of a depth-3 pattern
        let z = pat(vec![vec![3], vec![3, 1], vec![4, 2, 0]]);
        let r = qrsk_push_probability(&z, 2, 2, 0.5);
        assert!((r - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn qwhittaker_examples() {
        let q: f64 = 0.37;
        let z = pat(vec![vec![2], vec![2, 0]]);
        let x = [1.3, 0.7];
        assert!((qwhittaker_rate(&z, &x, q, 2, 1) - 0.7 * (1.0 + q + q * q)).abs() < 1e-15);
        assert!((qwhittaker_rate(&z, &x, q, 2, 2) - 0.7 * (1.0 - q * q)).abs() < 1e-15);
        assert_eq!(qwhittaker_rate(&z, &x, q, 1, 1), 1.3);
        let blocked = pat(vec![vec![2], vec![3, 2]]);
        assert_eq!(qwhittaker_rate(&blocked, &x, q, 2, 2), 0.0);
    }
}
