//! Non-intersecting down-right lattice paths in matrix coordinates.
//!
//! A path from (i, j) to (i', j') moves one step down or one step right at a
//! time and collects the weight of every visited cell. The semiring decides
//! how weights combine: (max, +) gives last-passage values, (+, ×) gives
//! polymer partition functions.

use crate::error::CombinatError;
use crate::matrix::WeightMatrix;
use num_traits::Num;
use std::fmt::Debug;

/// Largest matrix the exhaustive oracle accepts.
pub const MAX_ORACLE_CELLS: usize = 30;

pub trait Semiring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// (max, +) over integers; `None` is −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxPlus(pub Option<i64>);

impl From<i64> for MaxPlus {
    fn from(v: i64) -> Self {
        MaxPlus(Some(v))
    }
}

impl Semiring for MaxPlus {
    fn zero() -> Self {
        MaxPlus(None)
    }
    fn one() -> Self {
        MaxPlus(Some(0))
    }
    fn add(&self, o: &Self) -> Self {
        match (self.0, o.0) {
            (Some(a), Some(b)) => MaxPlus(Some(a.max(b))),
            (a, None) => MaxPlus(a),
            (None, b) => MaxPlus(b),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        match (self.0, o.0) {
            (Some(a), Some(b)) => MaxPlus(Some(a + b)),
            _ => MaxPlus(None),
        }
    }
}

/// Ordinary (+, ×) over any numeric ring.
#[derive(Debug, Clone, PartialEq)]
pub struct SumProduct<T>(pub T);

impl<T: Num + Clone + Debug> Semiring for SumProduct<T> {
    fn zero() -> Self {
        SumProduct(T::zero())
    }
    fn one() -> Self {
        SumProduct(T::one())
    }
    fn add(&self, o: &Self) -> Self {
        SumProduct(self.0.clone() + o.0.clone())
    }
    fn mul(&self, o: &Self) -> Self {
        SumProduct(self.0.clone() * o.0.clone())
    }
}

/// r start cells and r end cells; path k runs from `starts[k]` to `ends[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathEnsembleQuery {
    starts: Vec<(usize, usize)>,
    ends: Vec<(usize, usize)>,
}

impl PathEnsembleQuery {
    pub fn new(starts: Vec<(usize, usize)>, ends: Vec<(usize, usize)>) -> Result<Self, CombinatError> {
        if starts.is_empty() || starts.len() != ends.len() {
            return Err(CombinatError::PathQuery(format!(
                "need r ≥ 1 starts and ends of equal length, got {} and {}",
                starts.len(),
                ends.len()
            )));
        }
        for list in [&starts, &ends] {
            if list.windows(2).any(|w| w[0] == w[1]) || list.iter().any(|&(i, j)| i == 0 || j == 0) {
                return Err(CombinatError::PathQuery(format!("cells must be distinct and 1-based: {list:?}")));
            }
        }
        Ok(Self { starts, ends })
    }

    /// One path from `from` to `to`.
    pub fn single(from: (usize, usize), to: (usize, usize)) -> Self {
        Self { starts: vec![from], ends: vec![to] }
    }

    /// r paths from (1,1),…,(1,r) to (rows, c−r+1),…,(rows, c): the ensemble
    /// whose value is z^c_1 + … + z^c_r (max-plus) or z^c_1 ⋯ z^c_r
    /// (sum-product) for the first c columns.
    pub fn greene(rows: usize, r: usize, c: usize) -> Result<Self, CombinatError> {
        if r == 0 || r > c {
            return Err(CombinatError::PathQuery(format!("need 1 ≤ r ≤ c, got r={r}, c={c}")));
        }
        Self::new((1..=r).map(|k| (1, k)).collect(), (c + 1 - r..=c).map(|k| (rows, k)).collect())
    }

    pub fn r(&self) -> usize {
        self.starts.len()
    }

    pub fn starts(&self) -> &[(usize, usize)] {
        &self.starts
    }

    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    fn check_bounds(&self, rows: usize, cols: usize) -> Result<(), CombinatError> {
        for &(i, j) in self.starts.iter().chain(&self.ends) {
            if i > rows || j > cols {
                return Err(CombinatError::PathQuery(format!("cell ({i},{j}) outside {rows}x{cols}")));
            }
        }
        Ok(())
    }
}

fn enumerate_paths(
    rows: usize,
    cols: usize,
    from: (usize, usize),
    to: (usize, usize),
) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if from.0 > to.0 || from.1 > to.1 || to.0 > rows || to.1 > cols {
        return out;
    }
    let mut cur = vec![from];
    fn rec(to: (usize, usize), cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let (i, j) = *cur.last().expect("non-empty");
        if (i, j) == to {
            out.push(cur.clone());
            return;
        }
        if i < to.0 {
            cur.push((i + 1, j));
            rec(to, cur, out);
            cur.pop();
        }
        if j < to.1 {
            cur.push((i, j + 1));
            rec(to, cur, out);
            cur.pop();
        }
    }
    rec(to, &mut cur, &mut out);
    out
}

/// Exhaustive sum (in the semiring) over all r-tuples of vertex-disjoint
/// down-right paths, path k joining `starts[k]` to `ends[k]`.
///
/// Exponential by design; limited to matrices with at most
/// [`MAX_ORACLE_CELLS`] cells. An empty ensemble yields the semiring zero.
pub fn brute_force_paths<S: Semiring>(w: &WeightMatrix<S>, q: &PathEnsembleQuery) -> Result<S, CombinatError> {
    let (rows, cols) = (w.rows(), w.cols());
    if rows * cols > MAX_ORACLE_CELLS {
        return Err(CombinatError::TooLarge { cells: rows * cols, max: MAX_ORACLE_CELLS });
    }
    q.check_bounds(rows, cols)?;
    let bit = |(i, j): (usize, usize)| 1u64 << ((i - 1) * cols + (j - 1));
    let families: Vec<Vec<(u64, S)>> = q
        .starts
        .iter()
        .zip(&q.ends)
        .map(|(&s, &e)| {
            enumerate_paths(rows, cols, s, e)
                .into_iter()
                .map(|p| {
                    let mask = p.iter().fold(0u64, |m, &c| m | bit(c));
                    let wt = p.iter().fold(S::one(), |acc, &c| acc.mul(&w[c]));
                    (mask, wt)
                })
                .collect()
        })
        .collect();

    fn rec<S: Semiring>(families: &[Vec<(u64, S)>], used: u64, acc: &S, total: &mut S) {
        match families.split_first() {
            None => *total = total.add(acc),
            Some((first, rest)) => {
                for (mask, wt) in first {
                    if mask & used == 0 {
                        rec(rest, used | mask, &acc.mul(wt), total);
                    }
                }
            }
        }
    }
    let mut total = S::zero();
    rec(&families, 0, &S::one(), &mut total);
    Ok(total)
}

/// Matrix of single-path sums h_{kl} = Σ_{π: starts[k] → ends[l]} ∏ w.
pub fn path_sum_matrix<T: Num + Clone>(w: &WeightMatrix<T>, q: &PathEnsembleQuery) -> Result<Vec<Vec<T>>, CombinatError> {
    let (rows, cols) = (w.rows(), w.cols());
    q.check_bounds(rows, cols)?;
    let mut out = Vec::with_capacity(q.r());
    for &(si, sj) in &q.starts {
        // dp[i][j] = sum over paths from the start to (i, j)
        let mut dp = vec![vec![T::zero(); cols + 1]; rows + 1];
        for i in si..=rows {
            for j in sj..=cols {
                let inflow = if (i, j) == (si, sj) {
                    T::one()
                } else {
                    dp[i - 1][j].clone() + dp[i][j - 1].clone()
                };
                dp[i][j] = inflow * w[(i, j)].clone();
            }
        }
        out.push(q.ends.iter().map(|&(ei, ej)| dp[ei][ej].clone()).collect());
    }
    Ok(out)
}

/// Lindström-Gessel-Viennot: det of the single-path sum matrix. Equals the
/// non-intersecting ensemble sum whenever only the identity pairing admits
/// disjoint ensembles (as for the Greene ensembles).
pub fn lgv_determinant<T: Num + Clone>(w: &WeightMatrix<T>, q: &PathEnsembleQuery) -> Result<T, CombinatError> {
    Ok(determinant(path_sum_matrix(w, q)?))
}

/// Fraction-free (Bareiss) determinant with row pivoting. Exact for
/// integer and rational types.
pub fn determinant<T: Num + Clone>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = T::zero() - sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m22() -> WeightMatrix<i64> {
        WeightMatrix::new(2, 2, vec![1, 2, 3, 4]).unwrap()
    }

    #[test]
    fn max_plus_single_path() {
        let w = m22().map(|&x| MaxPlus::from(x));
        let v = brute_force_paths(&w, &PathEnsembleQuery::single((1, 1), (2, 2))).unwrap();
        assert_eq!(v, MaxPlus(Some(8)));
    }

    #[test]
    fn sum_product_single_path() {
        let w = m22().map(|&x| SumProduct(x));
        let v = brute_force_paths(&w, &PathEnsembleQuery::single((1, 1), (2, 2))).unwrap();
        assert_eq!(v.0, 20);
    }

    #[test]
    fn two_paths_unique_ensemble() {
        let q = PathEnsembleQuery::new(vec![(1, 1), (1, 2)], vec![(2, 1), (2, 2)]).unwrap();
        let w = m22().map(|&x| SumProduct(x));
        assert_eq!(brute_force_paths(&w, &q).unwrap().0, 24);
        assert_eq!(lgv_determinant(&m22(), &q).unwrap(), 24);
    }

    #[test]
    fn empty_ensemble_is_zero() {
        let q = PathEnsembleQuery::new(vec![(1, 1), (1, 2)], vec![(1, 2), (2, 2)]).unwrap();
        let w = m22().map(|&x| MaxPlus::from(x));
        assert_eq!(brute_force_paths(&w, &q).unwrap(), MaxPlus(None));
    }

    #[test]
    fn rejects_large_matrices() {
        let w = WeightMatrix::from_fn(6, 6, |_, _| MaxPlus::from(1));
        let q = PathEnsembleQuery::single((1, 1), (6, 6));
        assert!(matches!(brute_force_paths(&w, &q), Err(CombinatError::TooLarge { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = vec![
            vec![BigInt::from(2), BigInt::from(-1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(3)],
            vec![BigInt::from(1), BigInt::from(4), BigInt::from(5)],
        ];
        // 2(0 - 12) + 1(0 - 3) = -27
        assert_eq!(determinant(a), BigInt::from(-27));
    }
}
