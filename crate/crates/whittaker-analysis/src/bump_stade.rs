//! Numerical check of ∫ e^{−1/x_n} Ψ_α(x) Ψ_β(x) ∏ dx/x = ∏ Γ(α_i + β_j).

use crate::gamma::ln_gamma;
use crate::{Result, WhittakerError};
use fredholm_numerics::quad::gauss_legendre;
use num_complex::Complex64;
use rayon::prelude::*;

const MARGIN: f64 = 12.0;
const START_NODES: usize = 6;
const MAX_NODES: usize = 24;
const REL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BumpStadeReport {
    pub integral: f64,
    pub exact: f64,
    /// |integral − exact|.
    pub residual: f64,
    /// (nodes per unit panel, residual) for every refinement level tried.
    pub history: Vec<(usize, f64)>,
}

/// Nodes and weights of `per`-point Gauss–Legendre on unit panels covering
/// [lo, hi].
struct Panels {
    x: Vec<f64>,
    w: Vec<f64>,
}

impl Panels {
    fn new(per: usize) -> Self {
        let (x, w) = gauss_legendre(per);
        Panels { x: x.iter().map(|t| 0.5 * (t + 1.0)).collect(), w: w.iter().map(|w| 0.5 * w).collect() }
    }

    fn integrate(&self, lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> f64 {
        let panels = (hi - lo).ceil().max(1.0) as usize;
        let h = (hi - lo) / panels as f64;
        let mut s = 0.0;
        for p in 0..panels {
            let a = lo + p as f64 * h;
            for (x, w) in self.x.iter().zip(&self.w) {
                s += w * h * f(a + h * x);
            }
        }
        s
    }

    fn nodes(&self, lo: f64, hi: f64) -> (Vec<f64>, Vec<f64>) {
        let panels = (hi - lo).ceil().max(1.0) as usize;
        let h = (hi - lo) / panels as f64;
        let mut xs = Vec::new();
        let mut ws = Vec::new();
        for p in 0..panels {
            let a = lo + p as f64 * h;
            for (x, w) in self.x.iter().zip(&self.w) {
                xs.push(a + h * x);
                ws.push(w * h);
            }
        }
        (xs, ws)
    }
}

/// Ψ^{gl_2}_λ(e^a, e^b) by the one-dimensional Givental integral.
fn psi2(l: &[f64], a: f64, b: f64, rule: &Panels) -> f64 {
    let lo = a.min(b) - MARGIN;
    let hi = a.max(b) + MARGIN;
    rule.integrate(lo, hi, |u| {
        let e = -l[0] * u - l[1] * (a + b - u) - (u - a).exp() - (b - u).exp();
        if e < -745.0 {
            0.0
        } else {
            e.exp()
        }
    })
}

fn integral(alpha: &[f64], beta: &[f64], per: usize, hi: f64) -> f64 {
    let rule = Panels::new(per);
    match alpha.len() {
        1 => {
            let t = alpha[0] + beta[0];
            rule.integrate(-6.0, hi, |u| (-(-u).exp() - t * u).exp())
        }
        _ => {
            let (lo2, lo1) = (-5.0, -13.0);
            let (u2, w2) = rule.nodes(lo2, hi);
            let (u1, w1) = rule.nodes(lo1, hi);
            u2.par_iter()
                .zip(&w2)
                .map(|(&b, &wb)| {
                    let damp = (-(-b).exp()).exp();
                    if damp == 0.0 {
                        return 0.0;
                    }
                    let mut s = 0.0;
                    for (&a, &wa) in u1.iter().zip(&w1) {
                        s += wa * psi2(alpha, a, b, &rule) * psi2(beta, a, b, &rule);
                    }
                    wb * damp * s
                })
                .collect::<Vec<_>>()
                .iter()
                .sum()
        }
    }
}

/// Runs the identity at a fixed number of nodes per unit panel.
pub fn bump_stade_at(alpha: &[f64], beta: &[f64], per: usize) -> Result<(f64, f64)> {
    let n = alpha.len();
    if n == 0 || n > 2 {
        return Err(WhittakerError::Rank(n));
    }
    if beta.len() != n {
        return Err(WhittakerError::Parameter("α and β differ in length".into()));
    }
    // x_1 → ∞ is the slowest direction: the integrand falls like x_1^{−c}.
    let c = alpha.iter().cloned().fold(f64::INFINITY, f64::min) + beta.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(c > 0.0) {
        return Err(WhittakerError::Parameter("need α_i + β_j > 0".into()));
    }
    if c < 0.3 {
        return Err(WhittakerError::NonConvergence { delta: (-80.0 * c).exp() });
    }
    let hi = (10.0 * std::f64::consts::LN_10 + (1.0 / c).ln().max(0.0)) / c + 2.0;
    let exact: f64 = alpha
        .iter()
        .flat_map(|a| beta.iter().map(move |b| ln_gamma(Complex64::new(a + b, 0.0)).re))
        .sum::<f64>()
        .exp();
    Ok((integral(alpha, beta, per, hi), exact))
}

/// Refines the quadrature until two levels agree to 1e−9 relative.
pub fn bump_stade(alpha: &[f64], beta: &[f64]) -> Result<BumpStadeReport> {
    let mut per = START_NODES;
    let mut history = Vec::new();
    let mut last: Option<f64> = None;
    loop {
        let (v, exact) = bump_stade_at(alpha, beta, per)?;
        history.push((per, (v - exact).abs()));
        if let Some(prev) = last {
            let delta = (v - prev).abs() / v.abs();
            if delta < REL_TOL {
                return Ok(BumpStadeReport { integral: v, exact, residual: (v - exact).abs(), history });
            }
            if per >= MAX_NODES {
                return Err(WhittakerError::NonConvergence { delta });
            }
        }
        last = Some(v);
        per *= 2;
    }
}

pub fn bump_stade_residual(alpha: &[f64], beta: &[f64]) -> Result<f64> {
    Ok(bump_stade(alpha, beta)?.residual)
}
