//! Schur polynomials.

use crate::SymError;
use combinat_core::gt::interlacing_rows_below;
use combinat_core::paths::determinant;
use combinat_core::{GtPattern, Partition};
use num_traits::{pow, Num};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    GtSum,
    /// Falls back to the GT sum when variables repeat.
    Bialternant,
}

pub fn schur<T: Num + Clone + PartialEq>(lambda: &Partition, x: &[T], method: Method) -> Result<T, SymError> {
    match method {
        Method::GtSum => schur_gt_sum(lambda, x),
        Method::Bialternant => match schur_bialternant(lambda, x) {
            Err(SymError::RepeatedVariables) => schur_gt_sum(lambda, x),
            r => r,
        },
    }
}

/// Σ over GT patterns with bottom row λ of ∏_j x_j^{|z^j| − |z^{j−1}|}.
pub fn schur_gt_sum<T: Num + Clone>(lambda: &Partition, x: &[T]) -> Result<T, SymError> {
    let n = x.len();
    if lambda.len() > n {
        return Err(SymError::TooLong { len: lambda.len(), vars: n });
    }
    if n == 0 {
        return Ok(T::one());
    }
    let mut total = T::zero();
    for p in GtPattern::with_bottom_row(&lambda.padded(n)) {
        let (_, ty) = p.shape_and_type().expect("valid pattern");
        let term = ty.iter().zip(x).fold(T::one(), |acc, (&k, xi)| acc * pow(xi.clone(), k as usize));
        total = total + term;
    }
    Ok(total)
}

/// det(x_i^{λ_j + n − j}) / det(x_i^{n − j}).
pub fn schur_bialternant<T: Num + Clone + PartialEq>(lambda: &Partition, x: &[T]) -> Result<T, SymError> {
    let n = x.len();
    if lambda.len() > n {
        return Err(SymError::TooLong { len: lambda.len(), vars: n });
    }
    for i in 0..n {
        for j in 0..i {
            if x[i] == x[j] {
                return Err(SymError::RepeatedVariables);
            }
        }
    }
    let lam = lambda.padded(n);
    let num: Vec<Vec<T>> =
        x.iter().map(|xi| (0..n).map(|j| pow(xi.clone(), lam[j] as usize + n - 1 - j)).collect()).collect();
    let den: Vec<Vec<T>> = x.iter().map(|xi| (0..n).map(|j| pow(xi.clone(), n - 1 - j)).collect()).collect();
    Ok(determinant(num) / determinant(den))
}

/// s_λ(x_1..x_n) = Σ_{μ ≺ λ} x_n^{|λ|−|μ|} s_μ(x_1..x_{n−1}), recursively.
pub fn schur_branching<T: Num + Clone>(lambda: &[i64], x: &[T]) -> T {
    let n = x.len();
    if n == 0 {
        return if lambda.iter().all(|&p| p == 0) { T::one() } else { T::zero() };
    }
    let mut row = lambda.to_vec();
    row.resize(n.max(row.len()), 0);
    if row[n..].iter().any(|&p| p != 0) {
        return T::zero();
    }
    row.truncate(n);
    let size: i64 = row.iter().sum();
    let mut total = T::zero();
    for mu in interlacing_rows_below(&row) {
        let k = (size - mu.iter().sum::<i64>()) as usize;
        total = total + pow(x[n - 1].clone(), k) * schur_branching(&mu, &x[..n - 1]);
    }
    total
}
