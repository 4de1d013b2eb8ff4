//! The Doob-transformed walk on the bottom row: λ → λ + e_i at rate
//! s_{λ+e_i}(x) / s_λ(x).

use crate::{DynamicsError, Result};
use combinat_core::Partition;
use num_traits::Num;
use schur_macdonald::schur_gt_sum;

fn in_chamber(l: &[i64]) -> bool {
    l.iter().all(|&v| v >= 0) && l.windows(2).all(|w| w[0] >= w[1])
}

fn schur<T: Num + Clone>(l: &[i64], x: &[T]) -> Result<T> {
    Ok(schur_gt_sum(&Partition::new(l.to_vec()).expect("checked"), x)?)
}

/// Rate from λ to ν; zero unless ν = λ + e_i lies in the chamber.
pub fn schur_doob_kernel<T: Num + Clone>(lambda: &[i64], nu: &[i64], x: &[T]) -> Result<T> {
    if !in_chamber(lambda) || lambda.len() != x.len() {
        return Err(DynamicsError::Chamber(lambda.to_vec()));
    }
    let diff: Vec<i64> = nu.iter().zip(lambda).map(|(a, b)| a - b).collect();
    let unit = nu.len() == lambda.len() && diff.iter().all(|&d| d == 0 || d == 1) && diff.iter().sum::<i64>() == 1;
    if !unit || !in_chamber(nu) {
        return Ok(T::zero());
    }
    Ok(schur(nu, x)? / schur(lambda, x)?)
}

/// All positive-rate moves out of λ.
pub fn doob_rates<T: Num + Clone>(lambda: &[i64], x: &[T]) -> Result<Vec<(Vec<i64>, T)>> {
    if !in_chamber(lambda) {
        return Err(DynamicsError::Chamber(lambda.to_vec()));
    }
    let mut out = Vec::new();
    for i in 0..lambda.len() {
        let mut nu = lambda.to_vec();
        nu[i] += 1;
        if in_chamber(&nu) {
            let r = schur_doob_kernel(lambda, &nu, x)?;
            out.push((nu, r));
        }
    }
    Ok(out)
}
