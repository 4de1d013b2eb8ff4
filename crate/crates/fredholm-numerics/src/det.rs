//! Nyström and series evaluation of Fredholm determinants.

use crate::quad::Quadrature;
use nalgebra::DMatrix;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DetMethod {
    Nystrom,
    /// Truncated expansion 1 + Σ_{n ≤ k_max} (1/n!) ∫ det(K(x_i, x_j)).
    Series { k_max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    Interval { a: f64, b: f64 },
    /// (start, ∞) mapped by s = start + scale·v/(1 − v).
    HalfLine { start: f64, scale: f64 },
    /// start, start + 1, … (node count is the truncation length).
    Integers { start: i64 },
}

impl Domain {
    pub fn rule(&self, n: usize) -> Quadrature {
        match *self {
            Domain::Interval { a, b } => Quadrature::legendre(n, a, b),
            Domain::HalfLine { start, scale } => Quadrature::half_line(start, scale, n),
            Domain::Integers { start } => Quadrature::integers(start, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetResult {
    pub value: f64,
    pub method: DetMethod,
    pub nodes: usize,
    /// |value(2n nodes) − value(n nodes)|.
    pub delta: f64,
    pub converged: bool,
}

/// Tolerance above which a doubling step flags the result.
pub const CONVERGENCE_TOL: f64 = 1e-6;

/// The symmetrised Nyström matrix c·W^{1/2} K W^{1/2}.
pub fn nystrom_matrix<K: Fn(f64, f64) -> f64 + Sync>(k: &K, q: &Quadrature, coupling: f64) -> DMatrix<f64> {
    let n = q.len();
    let sw: Vec<f64> = q.weights.iter().map(|w| w.sqrt()).collect();
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| coupling * sw[i] * k(q.nodes[i], q.nodes[j]) * sw[j]).collect())
        .collect();
    DMatrix::from_fn(n, n, |i, j| rows[i][j])
}

/// det(I + A).
pub fn nystrom_matrix_det(a: &DMatrix<f64>) -> f64 {
    (DMatrix::identity(a.nrows(), a.ncols()) + a).determinant()
}

/// Σ_{n ≤ k_max} e_n(A), the elementary symmetric functions of the
/// eigenvalues, obtained from traces of powers by Newton's identities.
pub fn series_det(a: &DMatrix<f64>, k_max: usize) -> f64 {
    let mut traces = vec![0.0; k_max + 1];
    let mut pow = a.clone();
    for t in traces.iter_mut().skip(1) {
        *t = pow.trace();
        pow = &pow * a;
    }
    let mut e = vec![1.0; k_max + 1];
    for n in 1..=k_max {
        let mut s = 0.0;
        for k in 1..=n {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            s += sign * e[n - k] * traces[k];
        }
        e[n] = s / n as f64;
    }
    e.iter().sum()
}

fn evaluate<K: Fn(f64, f64) -> f64 + Sync>(k: &K, domain: Domain, n: usize, method: DetMethod, coupling: f64) -> f64 {
    let a = nystrom_matrix(k, &domain.rule(n), coupling);
    match method {
        DetMethod::Nystrom => nystrom_matrix_det(&a),
        DetMethod::Series { k_max } => series_det(&a, k_max),
    }
}

/// det(I + c·K) on `domain` with n nodes, plus the change on doubling n.
pub fn fredholm_det<K: Fn(f64, f64) -> f64 + Sync>(
    k: &K,
    domain: Domain,
    n: usize,
    method: DetMethod,
    coupling: f64,
) -> DetResult {
    let value = evaluate(k, domain, n, method, coupling);
    let delta = (evaluate(k, domain, 2 * n, method, coupling) - value).abs();
    DetResult { value, method, nodes: n, delta, converged: delta < CONVERGENCE_TOL }
}
