//! Gelfand-Tsetlin patterns.
//!
//! A pattern of depth d stores z^i_j for 1 ≤ i ≤ d and 1 ≤ j ≤ min(i, w),
//! where the width cap w ≤ d allows the truncated patterns produced by RSK
//! when fewer words than letters are inserted. Storage is a flat row-major
//! triangle.

use crate::error::CombinatError;
use crate::partition::Partition;
use rand::Rng;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct GtPattern<T> {
    depth: usize,
    width: usize,
    data: Vec<T>,
}

/// Outcome of an interlacing check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GtValidity {
    Valid,
    /// First entry z^level_index (1-based) found outside its interlacing
    /// interval, or negative.
    Violation { level: usize, index: usize },
}

impl GtValidity {
    pub fn is_valid(self) -> bool {
        self == GtValidity::Valid
    }
}

fn row_len(i: usize, width: usize) -> usize {
    i.min(width)
}

fn offset(i: usize, width: usize) -> usize {
    // Σ_{k<i} min(k, w)
    let full = (i - 1).min(width);
    full * (full + 1) / 2 + (i - 1 - full) * width
}

impl<T: Clone> GtPattern<T> {
    /// Builds a full triangular pattern: row i must have i entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, CombinatError> {
        let width = rows.len();
        Self::from_rows_with_width(rows, width)
    }

    /// Builds a pattern truncated to `width` columns: row i must have
    /// min(i, width) entries.
    pub fn from_rows_with_width(rows: Vec<Vec<T>>, width: usize) -> Result<Self, CombinatError> {
        let depth = rows.len();
        for (k, r) in rows.iter().enumerate() {
            let expected = row_len(k + 1, width);
            if r.len() != expected {
                return Err(CombinatError::MalformedTriangle { row: k + 1, found: r.len(), expected });
            }
        }
        Ok(Self { depth, width, data: rows.into_iter().flatten().collect() })
    }

    /// Pattern of the given depth and width filled with `value`.
    pub fn filled(depth: usize, width: usize, value: T) -> Self {
        let width = width.min(depth);
        let n = if depth == 0 { 0 } else { offset(depth, width) + row_len(depth, width) };
        Self { depth, width, data: vec![value; n] }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Maximal row length.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of entries in row i.
    pub fn row_len(&self, i: usize) -> usize {
        row_len(i, self.width)
    }

    /// Row i (1-based).
    pub fn row(&self, i: usize) -> &[T] {
        let o = offset(i, self.width);
        &self.data[o..o + self.row_len(i)]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        let o = offset(i, self.width);
        let l = self.row_len(i);
        &mut self.data[o..o + l]
    }

    /// z^i_j, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(j >= 1 && j <= self.row_len(i), "z^{i}_{j} outside pattern");
        &self.data[offset(i, self.width) + j - 1]
    }

    /// z^i_j if present.
    pub fn try_get(&self, i: usize, j: usize) -> Option<&T> {
        if i >= 1 && i <= self.depth && j >= 1 && j <= self.row_len(i) {
            Some(&self.data[offset(i, self.width) + j - 1])
        } else {
            None
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(j >= 1 && j <= self.row_len(i));
        let o = offset(i, self.width);
        self.data[o + j - 1] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (1..=self.depth).map(|i| self.row(i).to_vec()).collect()
    }

    /// Flat row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Bottom row.
    pub fn bottom(&self) -> &[T] {
        self.row(self.depth)
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> GtPattern<U> {
        GtPattern { depth: self.depth, width: self.width, data: self.data.iter().map(f).collect() }
    }
}

impl GtPattern<i64> {
    /// Checks z^{i+1}_{j+1} ≤ z^i_j ≤ z^{i+1}_j (missing entries read as 0)
    /// and non-negativity.
    pub fn validate(&self) -> GtValidity {
        for i in 1..=self.depth {
            for j in 1..=self.row_len(i) {
                let z = *self.get(i, j);
                if z < 0 {
                    return GtValidity::Violation { level: i, index: j };
                }
                if i < self.depth {
                    let upper = *self.get(i + 1, j);
                    let lower = self.try_get(i + 1, j + 1).copied().unwrap_or(0);
                    if z > upper || z < lower {
                        return GtValidity::Violation { level: i, index: j };
                    }
                }
            }
        }
        GtValidity::Valid
    }

    /// Shape sh(Z) (bottom row) and type vector (|z^i| − |z^{i−1}|)_i.
    pub fn shape_and_type(&self) -> Result<(Partition, Vec<i64>), CombinatError> {
        let shape = Partition::new(self.bottom().to_vec())?;
        let mut prev = 0;
        let ty = (1..=self.depth)
            .map(|i| {
                let s: i64 = self.row(i).iter().sum();
                let t = s - prev;
                prev = s;
                t
            })
            .collect();
        Ok((shape, ty))
    }

    /// Draws a random valid pattern by sampling interlaced rows top-down.
    pub fn sample<R: Rng + ?Sized>(depth: usize, width: usize, max_step: i64, rng: &mut R) -> Self {
        let width = width.min(depth);
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(depth);
        for i in 1..=depth {
            let len = row_len(i, width);
            let mut row = Vec::with_capacity(len);
            match rows.last() {
                None => row.push(rng.random_range(0..=max_step)),
                Some(prev) => {
                    for j in 1..=len {
                        let lo = prev.get(j - 1).copied().unwrap_or(0);
                        let hi = if j == 1 { prev[0] + max_step } else { prev[j - 2] };
                        row.push(rng.random_range(lo..=hi));
                    }
                }
            }
            rows.push(row);
        }
        Self::from_rows_with_width(rows, width).expect("sampler builds well-formed rows")
    }

    /// All full-triangular patterns with bottom row `shape` (zeros allowed).
    pub fn with_bottom_row(shape: &[i64]) -> Vec<Self> {
        let d = shape.len();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<i64>> = vec![shape.to_vec()];
        build_up(d, &mut stack, &mut out);
        out
    }
}

fn build_up(d: usize, stack: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern<i64>>) {
    let top = stack.last().expect("non-empty").clone();
    if top.len() <= 1 {
        let rows: Vec<Vec<i64>> = stack.iter().rev().cloned().collect();
        out.push(GtPattern::from_rows_with_width(rows, d).expect("well-formed"));
        return;
    }
    for mu in interlacing_rows_below(&top) {
        stack.push(mu);
        build_up(d, stack, out);
        stack.pop();
    }
}

/// All rows μ of length ℓ − 1 with λ_{j+1} ≤ μ_j ≤ λ_j, i.e. μ ≺ λ.
pub fn interlacing_rows_below(lambda: &[i64]) -> Vec<Vec<i64>> {
    let k = lambda.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(lambda: &[i64], k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let j = cur.len();
        if j == k {
            out.push(cur.clone());
            return;
        }
        for v in lambda[j + 1]..=lambda[j] {
            cur.push(v);
            rec(lambda, k, cur, out);
            cur.pop();
        }
    }
    rec(lambda, k, &mut cur, &mut out);
    out
}

/// All rows ν of the same length as λ with λ ≺ ν (ν interlaces λ from
/// above, i.e. ν/λ is a horizontal strip) and ν_1 ≤ `cap`.
pub fn interlacing_rows_above(lambda: &[i64], cap: i64) -> Vec<Vec<i64>> {
    let n = lambda.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(lambda: &[i64], cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let j = cur.len();
        if j == lambda.len() {
            out.push(cur.clone());
            return;
        }
        let hi = if j == 0 { cap } else { lambda[j - 1] };
        for v in lambda[j]..=hi {
            cur.push(v);
            rec(lambda, cap, cur, out);
            cur.pop();
        }
    }
    rec(lambda, cap, &mut cur, &mut out);
    out
}

impl GtPattern<f64> {
    /// Bottom row and multiplicative type (∏_j z^i_j / ∏_j z^{i−1}_j)_i.
    pub fn shape_and_type(&self) -> (Vec<f64>, Vec<f64>) {
        let mut prev = 1.0;
        let ty = (1..=self.depth)
            .map(|i| {
                let p: f64 = self.row(i).iter().product();
                let t = p / prev;
                prev = p;
                t
            })
            .collect();
        (self.bottom().to_vec(), ty)
    }

    /// All entries strictly positive and finite.
    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|&x| x.is_finite() && x > 0.0)
    }
}

/// Checks a list of rows for well-formedness and interlacing.
pub fn validate_gt(rows: &[Vec<i64>]) -> Result<GtValidity, CombinatError> {
    Ok(GtPattern::from_rows(rows.to_vec())?.validate())
}

impl<T: fmt::Display> fmt::Display for GtPattern<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.depth {
            let o = offset(i, self.width);
            let row: Vec<String> =
                self.data[o..o + row_len(i, self.width)].iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_examples() {
        assert_eq!(validate_gt(&[vec![5]]).unwrap(), GtValidity::Valid);
        assert_eq!(validate_gt(&[vec![3], vec![3, 1]]).unwrap(), GtValidity::Valid);
        assert_eq!(validate_gt(&[vec![3], vec![4, 1]]).unwrap(), GtValidity::Valid);
        assert_eq!(
            validate_gt(&[vec![3], vec![2, 0]]).unwrap(),
            GtValidity::Violation { level: 1, index: 1 }
        );
    }

    #[test]
    fn malformed_triangle() {
        let e = validate_gt(&[vec![3], vec![2]]);
        assert!(matches!(e, Err(CombinatError::MalformedTriangle { row: 2, .. })));
    }

    #[test]
    fn truncated_layout() {
        let p = GtPattern::from_rows_with_width(vec![vec![4], vec![5, 1], vec![6, 2], vec![7, 3]], 2).unwrap();
        assert_eq!(p.width(), 2);
        assert_eq!(p.row(4), &[7, 3]);
        assert!(p.validate().is_valid());
        assert_eq!(p.try_get(3, 3), None);
    }

    #[test]
    fn shape_and_type_integer() {
        let p = GtPattern::from_rows(vec![vec![2], vec![3, 1]]).unwrap();
        let (sh, ty) = p.shape_and_type().unwrap();
        assert_eq!(sh.parts(), &[3, 1]);
        assert_eq!(ty, vec![2, 2]);
    }

    #[test]
    fn shape_and_type_geometric() {
        let p = GtPattern::from_rows(vec![vec![3.0], vec![20.0, 1.2]]).unwrap();
        let (sh, ty) = p.shape_and_type();
        assert_eq!(sh, vec![20.0, 1.2]);
        assert!((ty[0] - 3.0).abs() < 1e-15 && (ty[1] - 8.0).abs() < 1e-14);
    }

    #[test]
    fn sampler_produces_valid_patterns() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 0..1000 {
            let d = 1 + k % 6;
            let w = 1 + (k / 6) % d;
            let p = GtPattern::sample(d, w, 4, &mut rng);
            assert!(p.validate().is_valid(), "{p}");
        }
    }

    #[test]
    fn enumeration_counts() {
        // number of SSYT of shape (2,1) with entries ≤ 3 is 8
        assert_eq!(GtPattern::with_bottom_row(&[2, 1, 0]).len(), 8);
        assert!(GtPattern::with_bottom_row(&[3, 1, 1]).iter().all(|p| p.validate().is_valid()));
        assert_eq!(interlacing_rows_above(&[1, 0], 2).len(), 4);
    }
}
