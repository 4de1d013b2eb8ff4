//! Local moves ℓ_{i,j} and the sweep that composes them into RSK.
//!
//! The sweep is generic over the rule so that the same index bookkeeping
//! drives (max, +) RSK here and (+, ×) geometric RSK elsewhere. Arrays are
//! rows of non-increasing length (a Young diagram; rectangles included).

/// One local move in some semiring, together with its inverse.
pub trait LocalRule {
    type V: Copy;
    /// (a, b; c, d) ↦ (a′, b; c, d′); returns (a′, d′).
    fn interior(&self, a: Self::V, b: Self::V, c: Self::V, d: Self::V) -> (Self::V, Self::V);
    /// Inverse of [`LocalRule::interior`]: (a′, b; c, d′) ↦ (a, d).
    fn interior_inv(&self, a: Self::V, b: Self::V, c: Self::V, d: Self::V) -> (Self::V, Self::V);
    /// Boundary move (prev, cur) ↦ cur′ along the first row or column.
    fn edge(&self, prev: Self::V, cur: Self::V) -> Self::V;
    fn edge_inv(&self, prev: Self::V, cur: Self::V) -> Self::V;
}

/// (a, b; c, d) ↦ (min(b,c) − a, b; c, d + max(b,c)).
#[derive(Debug, Clone, Copy, Default)]
pub struct MaxPlusRule {
    /// Mutation hook: replaces max by min in the d-update.
    pub corrupt: bool,
}

impl LocalRule for MaxPlusRule {
    type V = i64;
    fn interior(&self, a: i64, b: i64, c: i64, d: i64) -> (i64, i64) {
        let grow = if self.corrupt { b.min(c) } else { b.max(c) };
        (b.min(c) - a, d + grow)
    }
    fn interior_inv(&self, a: i64, b: i64, c: i64, d: i64) -> (i64, i64) {
        (b.min(c) - a, d - b.max(c))
    }
    fn edge(&self, prev: i64, cur: i64) -> i64 {
        cur + prev
    }
    fn edge_inv(&self, prev: i64, cur: i64) -> i64 {
        cur - prev
    }
}

/// Position class of a local move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellClass {
    Interior,
    FirstRow,
    FirstCol,
    Origin,
}

/// Cells touched by one combinatorial local move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalCells {
    /// (x_{i−1,j−1}, x_{i−1,j}, x_{i,j−1}, x_{i,j})
    Interior([i64; 4]),
    /// (x_{1,j−1}, x_{1,j})
    FirstRow([i64; 2]),
    /// (x_{i−1,1}, x_{i,1})
    FirstCol([i64; 2]),
    Origin(i64),
}

impl LocalCells {
    pub fn class(&self) -> CellClass {
        match self {
            LocalCells::Interior(_) => CellClass::Interior,
            LocalCells::FirstRow(_) => CellClass::FirstRow,
            LocalCells::FirstCol(_) => CellClass::FirstCol,
            LocalCells::Origin(_) => CellClass::Origin,
        }
    }
}

/// Applies the combinatorial move ℓ_{i,j} to the cells it touches.
pub fn local_move(cells: LocalCells) -> LocalCells {
    let r = MaxPlusRule::default();
    match cells {
        LocalCells::Interior([a, b, c, d]) => {
            let (a2, d2) = r.interior(a, b, c, d);
            LocalCells::Interior([a2, b, c, d2])
        }
        LocalCells::FirstRow([p, x]) => LocalCells::FirstRow([p, r.edge(p, x)]),
        LocalCells::FirstCol([p, x]) => LocalCells::FirstCol([p, r.edge(p, x)]),
        LocalCells::Origin(x) => LocalCells::Origin(x),
    }
}

/// ℓ_{i,j} on a 1-based (i, j) of the array.
fn apply<R: LocalRule>(rule: &R, t: &mut [Vec<R::V>], i: usize, j: usize, inverse: bool) {
    let (i0, j0) = (i - 1, j - 1);
    match (i, j) {
        (1, 1) => {}
        (1, _) => {
            let p = t[0][j0 - 1];
            t[0][j0] = if inverse { rule.edge_inv(p, t[0][j0]) } else { rule.edge(p, t[0][j0]) };
        }
        (_, 1) => {
            let p = t[i0 - 1][0];
            t[i0][0] = if inverse { rule.edge_inv(p, t[i0][0]) } else { rule.edge(p, t[i0][0]) };
        }
        _ => {
            let (a, b, c, d) = (t[i0 - 1][j0 - 1], t[i0 - 1][j0], t[i0][j0 - 1], t[i0][j0]);
            let (a2, d2) = if inverse { rule.interior_inv(a, b, c, d) } else { rule.interior(a, b, c, d) };
            t[i0 - 1][j0 - 1] = a2;
            t[i0][j0] = d2;
        }
    }
}

fn check_shape<V>(t: &[Vec<V>]) {
    assert!(t.windows(2).all(|w| w[0].len() >= w[1].len()), "rows must have non-increasing lengths");
}

/// R_n ∘ … ∘ R_1 with R_k = ρ^k_{len_k} ∘ … ∘ ρ^k_1 and
/// ρ^i_j = ℓ_{i−m,j−m} ∘ … ∘ ℓ_{i−1,j−1} ∘ ℓ_{i,j}, m = min(i,j) − 1.
pub fn forward_sweep<R: LocalRule>(rule: &R, t: &mut [Vec<R::V>]) {
    check_shape(t);
    for i in 1..=t.len() {
        for j in 1..=t[i - 1].len() {
            for m in 0..i.min(j) {
                apply(rule, t, i - m, j - m, false);
            }
        }
    }
}

/// Exact inverse of [`forward_sweep`].
pub fn inverse_sweep<R: LocalRule>(rule: &R, t: &mut [Vec<R::V>]) {
    check_shape(t);
    for i in (1..=t.len()).rev() {
        for j in (1..=t[i - 1].len()).rev() {
            for m in (0..i.min(j)).rev() {
                apply(rule, t, i - m, j - m, true);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_formula() {
        assert_eq!(local_move(LocalCells::Interior([0, 2, 3, 0])), LocalCells::Interior([2, 2, 3, 3]));
    }

    #[test]
    fn boundary_moves() {
        assert_eq!(local_move(LocalCells::FirstCol([4, 1])), LocalCells::FirstCol([4, 5]));
        assert_eq!(local_move(LocalCells::FirstRow([4, 1])), LocalCells::FirstRow([4, 5]));
        assert_eq!(local_move(LocalCells::Origin(9)), LocalCells::Origin(9));
        assert_eq!(LocalCells::Origin(9).class(), CellClass::Origin);
    }

    #[test]
    fn staircase_sweep_inverts() {
        let orig = vec![vec![1, 0, 2], vec![3, 1], vec![0]];
        let mut t = orig.clone();
        forward_sweep(&MaxPlusRule::default(), &mut t);
        assert_ne!(t, orig);
        inverse_sweep(&MaxPlusRule::default(), &mut t);
        assert_eq!(t, orig);
    }
}
