//! Exponential LPP with equal parameters α_i = β_j = a.
//!
//! With rate-2a weights on an N×N square, the last passage time has the
//! law of the top eigenvalue of a Laguerre ensemble, whose kernel is
//! Σ_{k<N} φ_k(x) φ_k(y) with φ_k(x) = √(2a) e^{−ax} L_k(2ax). This gives the
//! exponential-LPP Fredholm determinant for large N, where the contour
//! form would need residues of order N.

use crate::det::{DetMethod, DetResult, CONVERGENCE_TOL};
use crate::quad::Quadrature;
use crate::FredholmError;
use nalgebra::DMatrix;

/// Φ with Φ_{ik} = √w_i φ_k(x_i).
fn laguerre_functions(n: usize, a: f64, q: &Quadrature) -> DMatrix<f64> {
    let mut phi = DMatrix::zeros(q.len(), n);
    for (i, (&x, &w)) in q.nodes.iter().zip(&q.weights).enumerate() {
        let y = 2.0 * a * x;
        let scale = (2.0 * a * w).sqrt();
        let mut prev = 0.0;
        let mut cur = (-y / 2.0).exp();
        for k in 0..n {
            phi[(i, k)] = scale * cur;
            let next = ((2 * k + 1) as f64 - y) * cur / (k + 1) as f64 - k as f64 * prev / (k + 1) as f64;
            prev = cur;
            cur = next;
        }
    }
    phi
}

/// W^{1/2} K_N W^{1/2} on the nodes of `q`.
pub fn laguerre_kernel_matrix(n: usize, a: f64, q: &Quadrature) -> DMatrix<f64> {
    let phi = laguerre_functions(n, a, q);
    &phi * phi.transpose()
}

fn det_on(n: usize, a: f64, u: f64, nodes: usize) -> f64 {
    let scale = 4.0 * (2.0 / (a * a * a)).cbrt() * (n as f64).cbrt();
    let q = Quadrature::half_line(u, scale, nodes);
    let k = laguerre_kernel_matrix(n, a, &q);
    (DMatrix::identity(nodes, nodes) - k).determinant()
}

/// P(τ_N ≤ u) for rate-2a exponential LPP on an N×N square.
pub fn exp_lpp_cdf_equal(n: usize, a: f64, u: f64, nodes: usize) -> Result<DetResult, FredholmError> {
    if !(a > 0.0) || n == 0 {
        return Err(FredholmError::Parameter(format!("need a > 0 and N ≥ 1, got a = {a}, N = {n}")));
    }
    if u <= 0.0 {
        return Ok(DetResult { value: 0.0, method: DetMethod::Nystrom, nodes, delta: 0.0, converged: true });
    }
    let value = det_on(n, a, u, nodes);
    let delta = (det_on(n, a, u, 2 * nodes) - value).abs();
    Ok(DetResult { value, method: DetMethod::Nystrom, nodes, delta, converged: delta < CONVERGENCE_TOL })
}
