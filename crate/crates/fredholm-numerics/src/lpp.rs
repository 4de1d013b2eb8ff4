//! The law of geometric last passage percolation on an N×N square,
//! P(w_ij = k) = (1 − p_i q_j)(p_i q_j)^k.

use crate::det::{DetMethod, DetResult, CONVERGENCE_TOL};
use crate::kernels::LppContour;
use crate::FredholmError;
use combinat_core::Partition;
use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};
use rayon::prelude::*;
use schur_macdonald::{schur, Method};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LppMethod {
    SchurSum,
    /// Contour kernel with `nodes` trapezoid points per circle.
    Fredholm { nodes: usize },
    MonteCarlo { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    /// Plug-in standard error √(p̂(1 − p̂)/n).
    pub std_err: f64,
    pub samples: usize,
}

impl McEstimate {
    /// (p̂ − p₀)/σ₀ with the null standard deviation σ₀ = √(p₀(1 − p₀)/n).
    /// Unlike the plug-in error this stays finite when p̂ hits 0 or 1.
    pub fn z_score(&self, p0: f64) -> f64 {
        let sd = (p0 * (1.0 - p0) / self.samples as f64).sqrt();
        if sd == 0.0 {
            return if self.value == p0 { 0.0 } else { f64::INFINITY };
        }
        (self.value - p0) / sd
    }
}

fn check(p: &[f64], q: &[f64]) -> Result<(), FredholmError> {
    if p.len() != q.len() || p.is_empty() {
        return Err(FredholmError::Parameter(format!("need |p| = |q| ≥ 1, got {} and {}", p.len(), q.len())));
    }
    for pi in p {
        for qj in q {
            if !(pi * qj > 0.0 && pi * qj < 1.0) {
                return Err(FredholmError::Parameter(format!("p q = {} not in (0, 1)", pi * qj)));
            }
        }
    }
    Ok(())
}

/// ∏(1 − p_i q_j) Σ_{λ₁ ≤ u, ℓ(λ) ≤ N} s_λ(p) s_λ(q), exactly.
pub fn lpp_cdf_exact(u: i64, p: &[BigRational], q: &[BigRational]) -> BigRational {
    if u < 0 {
        return BigRational::zero();
    }
    let pref = p.iter().flat_map(|pi| q.iter().map(move |qj| BigRational::one() - pi * qj)).fold(BigRational::one(), |a, b| a * b);
    let n = p.len().min(q.len());
    let sum = Partition::all_in_box(n, u).iter().fold(BigRational::zero(), |acc, lam| {
        let sp = schur(lam, p, Method::Bialternant).expect("length fits");
        let sq = schur(lam, q, Method::Bialternant).expect("length fits");
        acc + sp * sq
    });
    pref * sum
}

/// det(I − χ K) on ℓ²({u+N, u+N+1, …}), χ the indicator of that set.
pub fn lpp_cdf_fredholm(u: i64, p: &[f64], q: &[f64], nodes: usize) -> Result<DetResult, FredholmError> {
    check(p, q)?;
    let method = DetMethod::Nystrom;
    if u < 0 {
        return Ok(DetResult { value: 0.0, method, nodes: 0, delta: 0.0, converged: true });
    }
    let contour = LppContour::new(p, q, None, nodes)?;
    let n = p.len() as i64;
    let rate = p.iter().cloned().fold(0.0, f64::max) * q.iter().cloned().fold(0.0, f64::max);
    let len = ((-42.0 / rate.ln()).ceil() as usize).max(4);
    let det = |len: usize| {
        let pts: Vec<i64> = (u + n..u + n + len as i64).collect();
        (DMatrix::identity(len, len) - contour.matrix(&pts)).determinant()
    };
    let value = det(len);
    let delta = (det(2 * len) - value).abs();
    Ok(DetResult { value, method, nodes: len, delta, converged: delta < CONVERGENCE_TOL })
}

fn lpp_time(w: &[u64], n: usize) -> u64 {
    let mut g = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            let up = if i > 0 { g[(i - 1) * n + j] } else { 0 };
            let left = if j > 0 { g[i * n + j - 1] } else { 0 };
            g[i * n + j] = w[i * n + j] + up.max(left);
        }
    }
    g[n * n - 1]
}

const CHUNK: usize = 1 << 14;

/// Empirical P(τ_N ≤ u) for every u in `us`, from `samples` independent
/// weight matrices. Chunks use separate ChaCha streams, so the result does
/// not depend on the thread count.
pub fn lpp_cdf_mc(p: &[f64], q: &[f64], us: &[i64], samples: usize, seed: u64) -> Result<Vec<McEstimate>, FredholmError> {
    check(p, q)?;
    let n = p.len();
    let dists: Vec<Geometric> = p
        .iter()
        .flat_map(|pi| q.iter().map(move |qj| Geometric::new(1.0 - pi * qj).expect("checked range")))
        .collect();
    let chunks = samples.div_ceil(CHUNK);
    let counts: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let m = CHUNK.min(samples - c * CHUNK);
            let mut hits = vec![0u64; us.len()];
            let mut w = vec![0u64; n * n];
            for _ in 0..m {
                for (x, d) in w.iter_mut().zip(&dists) {
                    *x = d.sample(&mut rng);
                }
                let tau = lpp_time(&w, n) as i64;
                for (h, u) in hits.iter_mut().zip(us) {
                    *h += (tau <= *u) as u64;
                }
            }
            hits
        })
        .collect();
    Ok((0..us.len())
        .map(|k| {
            let hits: u64 = counts.iter().map(|c| c[k]).sum();
            let v = hits as f64 / samples as f64;
            McEstimate { value: v, std_err: (v * (1.0 - v) / samples as f64).sqrt(), samples }
        })
        .collect())
}

/// P(τ_N ≤ u) in f64 by any of the three methods.
pub fn lpp_cdf(u: i64, p: &[f64], q: &[f64], method: LppMethod) -> Result<f64, FredholmError> {
    check(p, q)?;
    match method {
        LppMethod::SchurSum => {
            let conv = |v: &[f64]| v.iter().map(|x| BigRational::from_float(*x).expect("finite")).collect::<Vec<_>>();
            Ok(lpp_cdf_exact(u, &conv(p), &conv(q)).to_f64().expect("probability"))
        }
        LppMethod::Fredholm { nodes } => Ok(lpp_cdf_fredholm(u, p, q, nodes)?.value),
        LppMethod::MonteCarlo { samples, seed } => Ok(lpp_cdf_mc(p, q, &[u], samples, seed)?[0].value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schur_macdonald::coeffs::rat;

    #[test]
    fn single_site_closed_form() {
        let (p, q) = (rat(3, 10), rat(2, 5));
        for u in 0..10 {
            let pq = &p * &q;
            let want = BigRational::one() - num_traits::pow(pq, u as usize + 1);
            assert_eq!(lpp_cdf_exact(u, std::slice::from_ref(&p), std::slice::from_ref(&q)), want);
        }
    }

    #[test]
    fn negative_u() {
        assert!(lpp_cdf_exact(-1, &[rat(1, 2)], &[rat(1, 2)]).is_zero());
        assert_eq!(lpp_cdf(-3, &[0.3], &[0.3], LppMethod::Fredholm { nodes: 64 }).unwrap(), 0.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(lpp_cdf(2, &[1.2], &[0.9], LppMethod::SchurSum).is_err());
    }
}
