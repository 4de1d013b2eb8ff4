//! Geometric row insertion.

use crate::{GrskError, GrskOutput};
use combinat_core::{GtPattern, WeightMatrix, Word};

/// Geometric lifting of row insertion, over letters i..=N.
///
/// With ξ_k = x_i ⋯ x_k: ξ̃_i = ξ_i a_i, ξ̃_k = a_k (ξ̃_{k−1} + ξ_k), and
/// b_k = a_k ξ_k ξ̃_{k−1} / (ξ_{k−1} ξ̃_k) over letters i+1..=N. Inserting
/// into an empty row returns (a, ∅).
pub fn geom_row_insert(x: &Word<f64>, a: &Word<f64>) -> Result<(Word<f64>, Word<f64>), GrskError> {
    for word in [x, a] {
        if let Some(k) = word.multiplicities().iter().position(|&v| !(v.is_finite() && v > 0.0)) {
            return Err(combinat_core::CombinatError::InadmissibleWord { letter: word.start() + k }.into());
        }
    }
    if x.is_empty() {
        return Ok((a.clone(), Word::from_raw(a.start() + 1, vec![])));
    }
    if x.start() != a.start() || x.len() != a.len() {
        return Err(GrskError::WindowMismatch);
    }
    let (xm, am) = (x.multiplicities(), a.multiplicities());
    let len = xm.len();
    let mut xt = Vec::with_capacity(len);
    let mut b = Vec::with_capacity(len.saturating_sub(1));
    let (mut xi_prev, mut xit_prev) = (xm[0], xm[0] * am[0]);
    xt.push(xit_prev);
    for k in 1..len {
        let xi = xi_prev * xm[k];
        let xit = am[k] * (xit_prev + xi);
        b.push(am[k] * xi * xit_prev / (xi_prev * xit));
        xt.push(xit / xit_prev);
        xi_prev = xi;
        xit_prev = xit;
    }
    Ok((Word::from_raw(x.start(), xt), Word::from_raw(x.start() + 1, b)))
}

/// Largest relative residual of the discrete Toda relations
/// a_i x_i = x̃_i, a_j x_j = x̃_j b_j, 1/a_i + 1/x_{i+1} = 1/b_{i+1},
/// 1/a_j + 1/x_{j+1} = 1/x̃_j + 1/b_{j+1}.
pub fn toda_residual(x: &Word<f64>, a: &Word<f64>, xt: &Word<f64>, b: &Word<f64>) -> f64 {
    let (x, a, xt, b) = (x.multiplicities(), a.multiplicities(), xt.multiplicities(), b.multiplicities());
    let rel = |l: f64, r: f64| (l - r).abs() / l.abs().max(r.abs());
    let len = x.len();
    let bb = |k: usize| b[k - 1]; // b is indexed from the second letter
    let mut worst = rel(a[0] * x[0], xt[0]);
    for j in 1..len {
        worst = worst.max(rel(a[j] * x[j], xt[j] * bb(j)));
    }
    if len > 1 {
        worst = worst.max(rel(1.0 / a[0] + 1.0 / x[1], 1.0 / bb(1)));
    }
    for j in 1..len.saturating_sub(1) {
        worst = worst.max(rel(1.0 / a[j] + 1.0 / x[j + 1], 1.0 / xt[j] + 1.0 / bb(j + 1)));
    }
    worst
}

pub(crate) fn grsk_by_insertion(w: &WeightMatrix<f64>) -> GrskOutput {
    let (n, big_n) = (w.rows(), w.cols());
    let width = n.min(big_n);
    let mut p: Vec<Word<f64>> = (1..=width).map(|r| Word::from_raw(r, vec![])).collect();
    let mut zp_rows = Vec::with_capacity(n);
    for k in 1..=n {
        let mut a = Word::from_raw(1, w.row(k).to_vec());
        for row in p.iter_mut().take(k.min(big_n)) {
            let was_empty = row.is_empty();
            let (xt, b) = geom_row_insert(row, &a).expect("positive input");
            *row = xt;
            a = b;
            if was_empty || a.is_empty() {
                break;
            }
        }
        zp_rows.push(p.iter().take(k.min(big_n)).map(|r| r.multiplicities().iter().product()).collect::<Vec<f64>>());
    }
    let z_rows: Vec<Vec<f64>> = (1..=big_n)
        .map(|i| (1..=i.min(n)).map(|j| (j..=i).map(|l| p[j - 1].get(l)).product()).collect())
        .collect();
    let z = GtPattern::from_rows_with_width(z_rows, width).expect("layout");
    let zprime = GtPattern::from_rows_with_width(zp_rows, width).expect("layout");
    GrskOutput::from_patterns(z, zprime)
}
