//! Kernels of geometric and exponential last passage percolation.

use crate::FredholmError;
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

fn check_unit(name: &str, v: &[f64]) -> Result<(), FredholmError> {
    match v.iter().find(|x| !(**x > 0.0 && **x < 1.0)) {
        Some(x) => Err(FredholmError::Parameter(format!("{name} = {x} not in (0, 1)"))),
        None => Ok(()),
    }
}

fn prod_except(v: &[f64], skip: usize, f: impl Fn(f64) -> f64) -> f64 {
    v.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, x)| f(*x)).product()
}

/// Geometric-LPP kernel as the residue sum
/// Σ_{i,j} q_i^t p_j^s ∏_l(1−p_j q_l) ∏_k(1−p_k q_i) / ((1−p_j q_i) ∏_{l≠j}(p_j−p_l) ∏_{k≠i}(q_i−q_k)).
/// Needs pairwise distinct p's and q's. Real exponents are allowed.
pub fn lpp_kernel_residue(p: &[f64], q: &[f64], t: f64, s: f64) -> f64 {
    let mut k = 0.0;
    for (i, &qi) in q.iter().enumerate() {
        let a = qi.powf(t) * p.iter().map(|pk| 1.0 - pk * qi).product::<f64>() / prod_except(q, i, |qk| qi - qk);
        for (j, &pj) in p.iter().enumerate() {
            let b = pj.powf(s) * q.iter().map(|ql| 1.0 - pj * ql).product::<f64>() / prod_except(p, j, |pl| pj - pl);
            k += a * b / (1.0 - pj * qi);
        }
    }
    k
}

/// The double contour integral for the geometric-LPP kernel, discretised
/// by the trapezoid rule: ζ on the circle of radius r < 1 around the q's,
/// η on the unit circle.
#[derive(Debug, Clone)]
pub struct LppContour {
    zeta: Vec<Complex64>,
    zeta_w: Vec<Complex64>,
    eta: Vec<Complex64>,
    eta_w: Vec<Complex64>,
    cross: DMatrix<Complex64>,
}

impl LppContour {
    /// `r = None` picks √(max q), which balances the aliasing from the poles
    /// at the q's against the pole of 1/(1 − ζη) at |ζ| = 1.
    pub fn new(p: &[f64], q: &[f64], r: Option<f64>, nodes: usize) -> Result<Self, FredholmError> {
        check_unit("p", p)?;
        check_unit("q", q)?;
        if nodes < 16 {
            return Err(FredholmError::Contour(format!("{nodes} nodes, need at least 16")));
        }
        let qmax = q.iter().cloned().fold(0.0, f64::max);
        let r = r.unwrap_or(qmax.sqrt());
        if !(r > qmax && r < 1.0) {
            return Err(FredholmError::Contour(format!("radius {r} must lie in (max q = {qmax}, 1)")));
        }
        let circle = |rad: f64| -> Vec<Complex64> {
            (0..nodes).map(|k| Complex64::from_polar(rad, 2.0 * PI * k as f64 / nodes as f64)).collect()
        };
        let m = nodes as f64;
        let zeta = circle(r);
        let eta = circle(1.0);
        // (1/2πi)∮ f dz ≈ (1/m) Σ f(z_k) z_k on a centred circle
        let zeta_w = zeta
            .iter()
            .map(|z| z / m * p.iter().zip(q).map(|(pi, qi)| (1.0 - pi * z) / (z - qi)).product::<Complex64>())
            .collect();
        let eta_w = eta
            .iter()
            .map(|e| e / m * q.iter().zip(p).map(|(qj, pj)| (1.0 - e * qj) / (e - pj)).product::<Complex64>())
            .collect();
        let cross = DMatrix::from_fn(nodes, nodes, |a, b| Complex64::new(1.0, 0.0) / (1.0 - zeta[a] * eta[b]));
        Ok(LppContour { zeta, zeta_w, eta, eta_w, cross })
    }

    pub fn eval_complex(&self, t: i64, s: i64) -> Complex64 {
        let m = self.zeta.len();
        let mut total = Complex64::new(0.0, 0.0);
        for a in 0..m {
            let za = self.zeta_w[a] * self.zeta[a].powi(t as i32);
            let mut inner = Complex64::new(0.0, 0.0);
            for b in 0..m {
                inner += self.cross[(a, b)] * self.eta_w[b] * self.eta[b].powi(s as i32);
            }
            total += za * inner;
        }
        total
    }

    /// Real part; the conjugate-symmetric node sets make the imaginary part
    /// a rounding residue.
    pub fn eval(&self, t: i64, s: i64) -> f64 {
        self.eval_complex(t, s).re
    }

    /// Kernel matrix on the integer points `pts`, assembled as A·C·B.
    pub fn matrix(&self, pts: &[i64]) -> DMatrix<f64> {
        let m = self.zeta.len();
        let a = DMatrix::from_fn(pts.len(), m, |i, k| self.zeta_w[k] * self.zeta[k].powi(pts[i] as i32));
        let b = DMatrix::from_fn(m, pts.len(), |k, j| self.eta_w[k] * self.eta[k].powi(pts[j] as i32));
        (a * &self.cross * b).map(|c| c.re)
    }
}

/// Exponential-LPP kernel as the residue sum (distinct α's and β's):
/// Σ_{i,j} e^{−tα_i − sβ_j} ∏_k(β_k+α_i) ∏_l(α_l+β_j) / ((α_i+β_j) ∏_{k≠i}(α_k−α_i) ∏_{l≠j}(β_l−β_j)).
pub fn kexp_residue(alpha: &[f64], beta: &[f64], t: f64, s: f64) -> f64 {
    let mut k = 0.0;
    for (i, &ai) in alpha.iter().enumerate() {
        let a = (-t * ai).exp() * beta.iter().map(|bk| bk + ai).product::<f64>() / prod_except(alpha, i, |ak| ak - ai);
        for (j, &bj) in beta.iter().enumerate() {
            let b = (-s * bj).exp() * alpha.iter().map(|al| al + bj).product::<f64>() / prod_except(beta, j, |bl| bl - bj);
            k += a * b / (ai + bj);
        }
    }
    k
}

/// Exponential-LPP kernel by contour integration. The vertical line Γ₁ with
/// the α's on its right is closed around them (clockwise), Γ₂ is closed to
/// the left around the −β's; the two loops are circles, discretised by the
/// trapezoid rule with `nodes` points each. Works for repeated parameters.
pub fn kexp_contour(alpha: &[f64], beta: &[f64], t: f64, s: f64, nodes: usize) -> Result<f64, FredholmError> {
    if alpha.iter().chain(beta).any(|v| !(*v > 0.0)) {
        return Err(FredholmError::Parameter("α and β must be positive".into()));
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let (cz, cy) = (mean(alpha), -mean(beta));
    let sz = alpha.iter().map(|a| (a - cz).abs()).fold(0.0, f64::max);
    let sy = beta.iter().map(|b| (-b - cy).abs()).fold(0.0, f64::max);
    let gap = cz - cy - sz - sy;
    if gap <= 0.0 {
        return Err(FredholmError::Contour("α and −β clusters overlap".into()));
    }
    let (rz, ry) = (sz + 0.3 * gap, sy + 0.3 * gap);
    let m = nodes as f64;
    let pts = |c: f64, r: f64| -> Vec<Complex64> {
        (0..nodes).map(|k| c + Complex64::from_polar(r, 2.0 * PI * k as f64 / m)).collect()
    };
    let zs = pts(cz, rz);
    let ys = pts(cy, ry);
    let fz: Vec<Complex64> = zs
        .iter()
        .map(|z| {
            (z - cz) / m * (-t * z).exp() * alpha.iter().zip(beta).map(|(a, b)| (b + z) / (a - z)).product::<Complex64>()
        })
        .collect();
    let fy: Vec<Complex64> = ys
        .iter()
        .map(|y| {
            (y - cy) / m * (s * y).exp() * alpha.iter().zip(beta).map(|(a, b)| (a - y) / (b + y)).product::<Complex64>()
        })
        .collect();
    let mut total = Complex64::new(0.0, 0.0);
    for (z, wz) in zs.iter().zip(&fz) {
        for (y, wy) in ys.iter().zip(&fy) {
            total += wz * wy / (z - y);
        }
    }
    Ok(-total.re)
}
