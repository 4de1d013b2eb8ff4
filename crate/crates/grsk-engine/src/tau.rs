//! The τ-ratio backend: GT entries as ratios of non-intersecting path
//! partition functions, evaluated exactly in rational arithmetic.

use crate::GrskOutput;
use combinat_core::{lgv_determinant, GtPattern, PathEnsembleQuery, WeightMatrix};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

fn exact(w: &WeightMatrix<f64>) -> WeightMatrix<BigRational> {
    w.map(|&x| BigRational::from_float(x).expect("finite weight"))
}

/// τ(j, c): j non-intersecting paths from (1,1),…,(1,j) to
/// (n, c−j+1),…,(n, c).
pub fn tau(w: &WeightMatrix<BigRational>, j: usize, c: usize) -> BigRational {
    if j == 0 {
        return BigRational::one();
    }
    let q = PathEnsembleQuery::greene(w.rows(), j, c).expect("1 ≤ j ≤ c");
    lgv_determinant(w, &q).expect("in bounds")
}

fn pattern(w: &WeightMatrix<BigRational>) -> GtPattern<f64> {
    let (n, big_n) = (w.rows(), w.cols());
    let rows = (1..=big_n)
        .map(|c| {
            let taus: Vec<BigRational> = (0..=c.min(n)).map(|j| tau(w, j, c)).collect();
            (1..=c.min(n)).map(|j| (&taus[j] / &taus[j - 1]).to_f64().expect("finite ratio")).collect()
        })
        .collect();
    GtPattern::from_rows_with_width(rows, n.min(big_n)).expect("layout")
}

/// z^c_j = τ(j, c) / τ(j − 1, c), and Z′ the same for the transpose.
pub(crate) fn grsk_by_tau(w: &WeightMatrix<f64>) -> GrskOutput {
    let e = exact(w);
    GrskOutput::from_patterns(pattern(&e), pattern(&e.transpose()))
}
