//! Row insertion of words in (max, +) form.

use crate::glue::glue;
use crate::{RskError, RskOutput};
use combinat_core::{GtPattern, WeightMatrix, Word};

/// Inserts the word `a` into the row `x` (both over letters i..=N).
///
/// With cumulative counts ξ_k = x_i + … + x_k:
/// ξ̃_i = ξ_i + a_i, ξ̃_k = max(ξ̃_{k−1}, ξ_k) + a_k, and the bumped word
/// b_k = a_k + (ξ_k − ξ_{k−1}) − (ξ̃_k − ξ̃_{k−1}) over letters i+1..=N.
/// An empty `x` is read as the zero row.
pub fn row_insert_word(x: &Word<i64>, a: &Word<i64>) -> Result<(Word<i64>, Word<i64>), RskError> {
    let len = a.len();
    if x.start() != a.start() || (!x.is_empty() && x.len() != len) {
        return Err(RskError::WindowMismatch {
            x_start: x.start(),
            x_len: x.len(),
            a_start: a.start(),
            a_len: a.len(),
        });
    }
    let start = a.start();
    let xm = if x.is_empty() { vec![0; len] } else { x.multiplicities().to_vec() };
    let am = a.multiplicities();
    if len == 0 {
        return Ok((Word::from_raw(start, vec![]), Word::from_raw(start + 1, vec![])));
    }
    let mut xt = Vec::with_capacity(len);
    let mut b = Vec::with_capacity(len - 1);
    let (mut xi_prev, mut xit_prev) = (xm[0], xm[0] + am[0]);
    xt.push(xit_prev);
    for k in 1..len {
        let xi = xi_prev + xm[k];
        let xit = xit_prev.max(xi) + am[k];
        b.push(am[k] + (xi - xi_prev) - (xit - xit_prev));
        xt.push(xit - xit_prev);
        xi_prev = xi;
        xit_prev = xit;
    }
    Ok((Word::from_raw(start, xt), Word::from_raw(start + 1, b)))
}

/// RSK by inserting the rows w^1, …, w^n of `w` as words into a tableau.
pub(crate) fn rsk_by_insertion(w: &WeightMatrix<i64>) -> RskOutput {
    let (n, big_n) = (w.rows(), w.cols());
    let width = n.min(big_n);
    // tableau row r is a word over letters r..=N
    let mut p: Vec<Word<i64>> = (1..=width).map(|r| Word::from_raw(r, Vec::new())).collect();
    let mut zp_rows = Vec::with_capacity(n);
    for k in 1..=n {
        let mut a = Word::from_raw(1, w.row(k).to_vec());
        for row in p.iter_mut().take(k.min(big_n)) {
            let (xt, b) = row_insert_word(row, &a).expect("windows aligned by construction");
            *row = xt;
            a = b;
        }
        zp_rows.push(p.iter().take(k.min(big_n)).map(|r| r.total()).collect::<Vec<_>>());
    }
    let z_rows: Vec<Vec<i64>> = (1..=big_n)
        .map(|i| {
            (1..=i.min(n))
                .map(|j| {
                    let row = &p[j - 1];
                    if row.is_empty() {
                        0
                    } else {
                        (j..=i).map(|l| row.get(l)).sum()
                    }
                })
                .collect()
        })
        .collect();
    let z = GtPattern::from_rows_with_width(z_rows, width).expect("layout");
    let zprime = GtPattern::from_rows_with_width(zp_rows, width).expect("layout");
    let glued = glue(&z, &zprime);
    RskOutput { z, zprime, glued }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_tableau_step() {
        // row "156" receives a "2": becomes "126" and bumps a "5"
        let x = Word::from_letters(1, 7, &[1, 5, 6]);
        let a = Word::from_letters(1, 7, &[2]);
        let (xt, b) = row_insert_word(&x, &a).unwrap();
        assert_eq!(xt.letters(), vec![1, 2, 6]);
        assert_eq!(b.start(), 2);
        assert_eq!(b.letters(), vec![5]);
    }

    #[test]
    fn insertion_into_empty_row() {
        let a = Word::from_raw(1, vec![2, 0, 3]);
        let (xt, b) = row_insert_word(&Word::from_raw(1, vec![]), &a).unwrap();
        assert_eq!(xt, a);
        assert_eq!(b.total(), 0);
    }

    #[test]
    fn hand_iterated_two_letters() {
        let (xt, b) = row_insert_word(&Word::from_raw(1, vec![2, 1]), &Word::from_raw(1, vec![0, 3])).unwrap();
        assert_eq!(xt.multiplicities(), &[2, 4]);
        assert_eq!(b.multiplicities(), &[0]);
    }

    #[test]
    fn last_letter_has_no_bump() {
        let (xt, b) = row_insert_word(&Word::from_raw(3, vec![4]), &Word::from_raw(3, vec![2])).unwrap();
        assert_eq!(xt.multiplicities(), &[6]);
        assert!(b.is_empty());
    }

    #[test]
    fn window_mismatch() {
        let e = row_insert_word(&Word::from_raw(1, vec![1, 1]), &Word::from_raw(2, vec![1]));
        assert!(matches!(e, Err(RskError::WindowMismatch { .. })));
    }
}
