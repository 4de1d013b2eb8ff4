//! Truncated Cauchy and skew-Cauchy sums.

use crate::coeffs::FloatCoeffs;
use crate::macdonald::{macdonald, Which};
use crate::qpoch::qpochhammer;
use crate::schur::schur_gt_sum;
use crate::SymError;
use combinat_core::Partition;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Schur,
    Macdonald { q: f64, t: f64 },
}

/// H(x; y) = ∏ (t x_i y_j; q)_∞ / (x_i y_j; q)_∞.
pub fn cauchy_product(x: &[f64], y: &[f64], q: f64, t: f64) -> Result<f64, SymError> {
    let mut h = 1.0;
    for xi in x {
        for yj in y {
            let u = xi * yj;
            if !(u.abs() < 1.0) {
                return Err(SymError::Divergent);
            }
            h *= qpochhammer(t * u, q)? / qpochhammer(u, q)?;
        }
    }
    Ok(h)
}

/// |Σ_{|λ| ≤ L} P_λ(x) Q_λ(y) − H(x; y)|, with ℓ(λ) ≤ min(dim x, dim y).
pub fn cauchy_residual(x: &[f64], y: &[f64], family: Family, l: i64) -> Result<f64, SymError> {
    let len = x.len().min(y.len());
    let mut sum = 0.0;
    let h = match family {
        Family::Schur => {
            let h = cauchy_product(x, y, 0.0, 0.0)?;
            for lam in Partition::all_up_to(l, len) {
                sum += schur_gt_sum(&lam, x)? * schur_gt_sum(&lam, y)?;
            }
            h
        }
        Family::Macdonald { q, t } => {
            let h = cauchy_product(x, y, q, t)?;
            let c = FloatCoeffs::new(q, t)?;
            let empty = Partition::empty();
            for lam in Partition::all_up_to(l, len) {
                sum += macdonald(&lam, &empty, x, &c, Which::P) * macdonald(&lam, &empty, y, &c, Which::Q);
            }
            h
        }
    };
    Ok((sum - h).abs())
}

/// Both sides of the skew-Cauchy identity
/// Σ_μ P_{μ/λ}(x) Q_{μ/ν}(y) = H(x; y) Σ_μ Q_{λ/μ}(y) P_{ν/μ}(x),
/// the left side truncated at |μ| ≤ L.
pub fn skew_cauchy_sides(
    lam: &Partition,
    nu: &Partition,
    x: &[f64],
    y: &[f64],
    coeffs: &FloatCoeffs,
    l: i64,
) -> Result<(f64, f64), SymError> {
    let len = lam.len().max(nu.len()) + x.len().min(y.len());
    let lhs: f64 = Partition::all_up_to(l, len)
        .iter()
        .filter(|mu| mu.contains(lam) && mu.contains(nu))
        .map(|mu| macdonald(mu, lam, x, coeffs, Which::P) * macdonald(mu, nu, y, coeffs, Which::Q))
        .sum();
    let inner: f64 = Partition::all_up_to(lam.size().min(nu.size()), lam.len().min(nu.len()))
        .iter()
        .filter(|mu| lam.contains(mu) && nu.contains(mu))
        .map(|mu| macdonald(lam, mu, y, coeffs, Which::Q) * macdonald(nu, mu, x, coeffs, Which::P))
        .sum();
    Ok((lhs, cauchy_product(x, y, coeffs.q, coeffs.t)? * inner))
}
