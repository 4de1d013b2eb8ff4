//! E[exp(−s Z_n)] for the log-gamma polymer with inverse-gamma weights of
//! parameters α_i + β_j, by the Mellin–Barnes contour integral or by Monte
//! Carlo.
//!
//! On vertical lines λ_j = δ + i y_j the contour formula reads
//!   (2π)^{−n} (n!)^{−1} ∫ ∏_{i≠j} Γ(λ_i − λ_j)^{−1} ∏_{j,k} Γ(λ_j − β_k)
//!     ∏_j s^{β_j − λ_j} ∏_{i,j} Γ(α_i + λ_j) / Γ(α_i + β_j) dy,
//! which needs δ > β_k and δ > −α_i for all indices.

use crate::gamma::{gamma, ln_gamma};
use crate::sklyanin::pair_product_imag;
use crate::{Result, WhittakerError};
use fredholm_numerics::Quadrature;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use rayon::prelude::*;
use std::f64::consts::PI;

pub const DEFAULT_HEIGHT: f64 = 40.0;
pub const MIN_REPLICAS: usize = 100;
const CHUNK: usize = 1 << 12;
const PER_PANEL: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    /// Real part of every line; None picks max(β, −α) + 1/2.
    pub delta: Option<f64>,
    /// Lines are cut at |Im λ| ≤ height.
    pub height: f64,
    /// Gauss–Legendre nodes per line.
    pub nodes: usize,
}

impl Default for ContourSpec {
    fn default() -> Self {
        ContourSpec { delta: None, height: DEFAULT_HEIGHT, nodes: 80 * PER_PANEL }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LaplaceMethod {
    Contour(ContourSpec),
    MonteCarlo { replicas: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceEstimate {
    pub value: f64,
    /// Standard error for Monte Carlo; |Im| of the quadrature for contours.
    pub error: f64,
}

fn check(s: f64, alpha: &[f64], beta: &[f64]) -> Result<()> {
    if alpha.is_empty() || alpha.len() != beta.len() {
        return Err(WhittakerError::Parameter("α and β must be nonempty and of equal length".into()));
    }
    if !(s >= 0.0 && s.is_finite()) {
        return Err(WhittakerError::Parameter(format!("s = {s} must be finite and ≥ 0")));
    }
    for a in alpha {
        for b in beta {
            if !(a + b > 0.0) {
                return Err(WhittakerError::Parameter("need α_i + β_j > 0".into()));
            }
        }
    }
    Ok(())
}

pub fn loggamma_laplace(s: f64, alpha: &[f64], beta: &[f64], method: LaplaceMethod) -> Result<LaplaceEstimate> {
    check(s, alpha, beta)?;
    match method {
        LaplaceMethod::Contour(spec) => contour(s, alpha, beta, &spec),
        LaplaceMethod::MonteCarlo { replicas, seed } => monte_carlo(s, alpha, beta, replicas, seed),
    }
}

fn contour(s: f64, alpha: &[f64], beta: &[f64], spec: &ContourSpec) -> Result<LaplaceEstimate> {
    let n = alpha.len();
    if n > 2 {
        return Err(WhittakerError::Rank(n));
    }
    if spec.nodes < 8 || !(spec.height > 0.0) {
        return Err(WhittakerError::Parameter("contour needs at least 8 nodes and a positive height".into()));
    }
    let bmax = beta.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let amin = alpha.iter().cloned().fold(f64::INFINITY, f64::min);
    let delta = spec.delta.unwrap_or(bmax.max(-amin) + 0.5);
    if !(delta > bmax) {
        return Err(WhittakerError::Contour(format!("δ = {delta} is not right of β_max = {bmax}")));
    }
    if !(delta > -amin) {
        return Err(WhittakerError::Contour(format!("δ = {delta} is not right of −α_min = {}", -amin)));
    }
    if s == 0.0 {
        return Ok(LaplaceEstimate { value: 1.0, error: 0.0 });
    }
    let ls = s.ln();
    // every coordinate carries the same one-variable factor
    let one = |y: f64| -> Complex64 {
        let l = Complex64::new(delta, y);
        let mut g = -l * ls;
        for b in beta {
            g += ln_gamma(l - b);
        }
        for a in alpha {
            g += ln_gamma(l + a);
        }
        g.exp()
    };
    let norm: f64 = alpha.iter().flat_map(|a| beta.iter().map(move |b| ln_gamma(Complex64::new(a + b, 0.0)).re)).sum();
    let sb: f64 = beta.iter().sum();
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    let c = (sb * ls - norm).exp() / ((2.0 * PI).powi(n as i32) * fact);

    let panels = spec.nodes.div_ceil(PER_PANEL);
    let q = Quadrature::composite(panels, PER_PANEL, -spec.height, spec.height);
    let g: Vec<Complex64> = q.nodes.par_iter().map(|&y| one(y)).collect();
    let total: Complex64 = match n {
        1 => g.iter().zip(&q.weights).map(|(g, w)| g * w).sum(),
        _ => (0..q.len())
            .into_par_iter()
            .map(|i| {
                let mut acc = Complex64::new(0.0, 0.0);
                for j in 0..q.len() {
                    let p = pair_product_imag(&[q.nodes[i], q.nodes[j]]);
                    acc += g[j] * (q.weights[j] * p);
                }
                acc * g[i] * q.weights[i]
            })
            .collect::<Vec<_>>()
            .into_iter()
            .sum(),
    };
    let v = total * c;
    Ok(LaplaceEstimate { value: v.re, error: v.im.abs() })
}

/// ln Z for the n×n corner-to-corner polymer, paths summed in log space.
fn log_partition(logw: &[f64], n: usize, row: &mut [f64]) -> f64 {
    for i in 0..n {
        for j in 0..n {
            let w = logw[i * n + j];
            row[j] = match (i, j) {
                (0, 0) => w,
                (0, _) => w + row[j - 1],
                (_, 0) => w + row[j],
                _ => {
                    let (a, b) = (row[j], row[j - 1]);
                    let m = a.max(b);
                    w + m + ((a - m).exp() + (b - m).exp()).ln()
                }
            };
        }
    }
    row[n - 1]
}

fn monte_carlo(s: f64, alpha: &[f64], beta: &[f64], replicas: usize, seed: u64) -> Result<LaplaceEstimate> {
    if replicas < MIN_REPLICAS {
        return Err(WhittakerError::TooFewReplicas(replicas));
    }
    let n = alpha.len();
    let dists: Vec<Gamma<f64>> = alpha
        .iter()
        .flat_map(|a| beta.iter().map(move |b| Gamma::new(a + b, 1.0).expect("positive shape")))
        .collect();
    let chunks = replicas.div_ceil(CHUNK);
    let sums: Vec<(f64, f64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let count = CHUNK.min(replicas - c * CHUNK);
            let mut logw = vec![0.0; n * n];
            let mut row = vec![0.0; n];
            let (mut s1, mut s2) = (0.0, 0.0);
            for _ in 0..count {
                for (lw, d) in logw.iter_mut().zip(&dists) {
                    // w = 1/G with G ~ Gamma(α_i + β_j, 1)
                    *lw = -d.sample(&mut rng).ln();
                }
                let z = log_partition(&logw, n, &mut row).exp();
                let v = (-s * z).exp();
                s1 += v;
                s2 += v * v;
            }
            (s1, s2)
        })
        .collect();
    let (s1, s2) = sums.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let r = replicas as f64;
    let mean = s1 / r;
    let var = ((s2 / r - mean * mean) * r / (r - 1.0)).max(0.0);
    Ok(LaplaceEstimate { value: mean, error: (var / r).sqrt() })
}

/// E[exp(−s w)] for one inverse-gamma(θ) weight by direct integration of
/// its density in log coordinates; the reference for rank one.
pub fn loggamma_laplace_1d(s: f64, theta: f64) -> f64 {
    let norm = gamma(Complex64::new(theta, 0.0)).re;
    let q = Quadrature::composite(400, 16, -60.0 / theta - 5.0, 5.0);
    // w = e^{−t}: density w^{−θ} e^{−1/w} dw/w / Γ(θ)
    q.integrate(|t| (theta * t - t.exp() - s * (-t).exp()).exp()) / norm
}
