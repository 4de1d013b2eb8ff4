//! Givental's integral for GL(n) Whittaker functions, n ≤ 3.
//!
//! Interior entries are integrated in log coordinates u = ln z over
//! [min ln x − margin, max ln x + margin]. Every interior entry is squeezed
//! between neighbours of the row below by the energy, so e^{−E} is doubly
//! exponentially small outside that window.

use crate::{Result, WhittakerError};
use combinat_core::GtPattern;
use fredholm_numerics::Quadrature;
use num_complex::Complex64;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GiventalQuad {
    pub margin: f64,
    pub panel_width: f64,
    pub nodes_per_panel: usize,
    /// Largest accepted relative change against the rule with half the nodes.
    pub tol: f64,
}

impl Default for GiventalQuad {
    fn default() -> Self {
        GiventalQuad { margin: 12.0, panel_width: 1.0, nodes_per_panel: 12, tol: 1e-6 }
    }
}

impl GiventalQuad {
    /// `width` caps the panel width below `panel_width` when the integrand is
    /// sharply peaked.
    pub(crate) fn rule(&self, lo: f64, hi: f64, per: usize, width: f64) -> Quadrature {
        let panels = ((hi - lo) / self.panel_width.min(width)).ceil().max(1.0) as usize;
        Quadrature::composite(panels, per, lo, hi)
    }
}

/// Twice the width of the sharpest peak. An interior u between ln x_j and
/// ln x_{j+1} sees e^{u − ln x_j} + e^{ln x_{j+1} − u}, whose curvature at the
/// minimum is 2 e^{gap/2}; the peak narrows as ln x_{j+1} − ln x_j grows.
fn peak_width(lx: &[f64]) -> f64 {
    let gap = lx.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
    2.0 / (2.0 * (gap / 2.0).exp()).sqrt()
}

#[derive(Debug, Clone, PartialEq)]
pub struct WhittakerQuery {
    pub lambda: Vec<Complex64>,
    pub x: Vec<f64>,
    pub quad: GiventalQuad,
}

impl WhittakerQuery {
    pub fn new(lambda: &[f64], x: &[f64]) -> Self {
        Self::complex(&lambda.iter().map(|&l| Complex64::new(l, 0.0)).collect::<Vec<_>>(), x)
    }

    pub fn complex(lambda: &[Complex64], x: &[f64]) -> Self {
        WhittakerQuery { lambda: lambda.to_vec(), x: x.to_vec(), quad: GiventalQuad::default() }
    }

    pub fn with_quad(mut self, quad: GiventalQuad) -> Self {
        self.quad = quad;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerValue {
    pub value: Complex64,
    /// Relative change against the half-node rule.
    pub delta: f64,
}

/// type(Z)^{−λ} e^{−E(Z)} for a positive geometric pattern.
pub fn givental_weight(lambda: &[Complex64], z: &GtPattern<f64>) -> Complex64 {
    let (_, ty) = z.shape_and_type();
    let log_type: Complex64 = lambda.iter().zip(&ty).map(|(l, t)| -l * t.ln()).sum();
    (log_type - grsk_engine::gt_energy(z)).exp()
}

/// ln of the integrand on the log-coordinate triangle `rows` (row i has i
/// entries, the last row is ln x).
pub(crate) fn log_weight(lambda: &[Complex64], rows: &[&[f64]]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut prev = 0.0;
    for (k, row) in rows.iter().enumerate() {
        let s: f64 = row.iter().sum();
        acc -= lambda[k] * (s - prev);
        prev = s;
    }
    let mut e = 0.0;
    for i in 0..rows.len() - 1 {
        let (up, down) = (rows[i], rows[i + 1]);
        for j in 0..up.len() {
            e += (up[j] - down[j]).exp() + (down[j + 1] - up[j]).exp();
        }
    }
    acc - e
}

fn integrate(lambda: &[Complex64], lx: &[f64], q: &Quadrature) -> Complex64 {
    let term = |rows: &[&[f64]], w: f64| -> Complex64 {
        let l = log_weight(lambda, rows);
        if l.re < -745.0 {
            Complex64::new(0.0, 0.0)
        } else {
            w * l.exp()
        }
    };
    let (u, w) = (&q.nodes, &q.weights);
    match lx.len() {
        2 => u.iter().zip(w).map(|(&a, &wa)| term(&[&[a], lx], wa)).sum(),
        3 => (0..u.len())
            .into_par_iter()
            .map(|i| {
                let mut s = Complex64::new(0.0, 0.0);
                for j in 0..u.len() {
                    for k in 0..u.len() {
                        s += term(&[&[u[i]], &[u[j], u[k]], lx], w[i] * w[j] * w[k]);
                    }
                }
                s
            })
            .collect::<Vec<_>>()
            .into_iter()
            .sum(),
        _ => unreachable!(),
    }
}

/// Ψ^{gl_n}_λ(x) for n ≤ 3. n = 1 is the closed form x^{−λ}.
pub fn whittaker_gln(q: &WhittakerQuery) -> Result<WhittakerValue> {
    let n = q.x.len();
    if n == 0 || n > 3 {
        return Err(WhittakerError::Rank(n));
    }
    if q.lambda.len() != n {
        return Err(WhittakerError::Parameter(format!("λ has length {}, x has {n}", q.lambda.len())));
    }
    if q.x.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
        return Err(WhittakerError::Parameter("x must be strictly positive".into()));
    }
    let lx: Vec<f64> = q.x.iter().map(|v| v.ln()).collect();
    if n == 1 {
        let l = q.lambda[0];
        let value = Complex64::from_polar(q.x[0].powf(-l.re), -l.im * lx[0]);
        return Ok(WhittakerValue { value, delta: 0.0 });
    }
    let g = &q.quad;
    if g.nodes_per_panel < 2 || !(g.margin > 0.0 && g.panel_width > 0.0) {
        return Err(WhittakerError::Parameter("degenerate quadrature".into()));
    }
    let lo = lx.iter().cloned().fold(f64::INFINITY, f64::min) - g.margin;
    let hi = lx.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + g.margin;
    let width = peak_width(&lx);
    let fine = integrate(&q.lambda, &lx, &g.rule(lo, hi, g.nodes_per_panel, width));
    let coarse = integrate(&q.lambda, &lx, &g.rule(lo, hi, g.nodes_per_panel.div_ceil(2), width));
    let delta = (fine - coarse).norm() / fine.norm();
    if !(delta <= g.tol) {
        return Err(WhittakerError::NonConvergence { delta });
    }
    Ok(WhittakerValue { value: fine, delta })
}
