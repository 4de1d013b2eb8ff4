//! Rectangular weight matrices.

use crate::error::CombinatError;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Entry types admissible as weights: non-negative integers (combinatorial
/// mode) or strictly positive finite reals (geometric mode).
pub trait Weight: Copy + PartialOrd + fmt::Debug {
    fn admissible(self) -> bool;
}

impl Weight for i64 {
    fn admissible(self) -> bool {
        self >= 0
    }
}

impl Weight for f64 {
    fn admissible(self) -> bool {
        self.is_finite() && self > 0.0
    }
}

/// Row-major `rows x cols` array. Indices are 1-based as in w^i_j.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> WeightMatrix<T> {
    /// Builds a matrix without checking weight admissibility. Use
    /// [`WeightMatrix::new`] for weight types.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, CombinatError> {
        if data.len() != rows * cols {
            return Err(CombinatError::Shape { rows, cols, len: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, CombinatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<T> = rows.iter().flat_map(|x| x.iter().cloned()).collect();
        Self::from_vec(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (1..=self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> WeightMatrix<U> {
        WeightMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Weight> WeightMatrix<T> {
    /// Builds a matrix and checks every entry is an admissible weight.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, CombinatError> {
        let m = Self::from_vec(rows, cols, data)?;
        m.check()?;
        Ok(m)
    }

    pub fn check(&self) -> Result<(), CombinatError> {
        for (k, w) in self.data.iter().enumerate() {
            if !w.admissible() {
                return Err(CombinatError::InadmissibleWeight {
                    row: k / self.cols + 1,
                    col: k % self.cols + 1,
                });
            }
        }
        Ok(())
    }
}

impl WeightMatrix<i64> {
    /// Permutation matrix with a one at (i, σ(i)), σ given in one-line
    /// notation with values 1..=n.
    pub fn permutation(sigma: &[usize]) -> Self {
        let n = sigma.len();
        Self::from_fn(n, n, |i, j| i64::from(sigma[i - 1] == j))
    }
}

impl<T> Index<(usize, usize)> for WeightMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.data[(i - 1) * self.cols + (j - 1)]
    }
}

impl<T> IndexMut<(usize, usize)> for WeightMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &mut self.data[(i - 1) * self.cols + (j - 1)]
    }
}
