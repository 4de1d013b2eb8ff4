//! Pieri expansions and their verifier.

use crate::coeffs::Coefficients;
use crate::macdonald::{macdonald, Which};
use crate::schur::schur_gt_sum;
use combinat_core::Partition;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieriRule {
    /// h₁ s_λ = Σ s_{λ+e_i}.
    SchurH1,
    /// g₁ P_μ = Σ φ_{λ/μ} P_λ.
    MacdonaldG1,
    /// e₁ P_μ = Σ ψ′_{λ/μ} P_λ.
    MacdonaldE1,
}

/// λ + e_i for every addable row i.
fn add_box(lam: &Partition) -> Vec<Partition> {
    (1..=lam.len() + 1)
        .filter(|&i| i == 1 || lam.part(i - 1) > lam.part(i))
        .map(|i| {
            let mut parts = lam.padded(lam.len() + 1);
            parts[i - 1] += 1;
            Partition::new(parts).expect("addable corner")
        })
        .collect()
}

pub fn pieri_apply<C: Coefficients>(lam: &Partition, rule: PieriRule, coeffs: &C) -> Vec<(Partition, C::T)> {
    add_box(lam)
        .into_iter()
        .map(|nu| {
            let c = match rule {
                PieriRule::SchurH1 => C::T::one(),
                PieriRule::MacdonaldG1 => coeffs.phi(&nu, lam),
                PieriRule::MacdonaldE1 => coeffs.psi_prime(&nu, lam),
            };
            (nu, c)
        })
        .collect()
}

/// Multiplies the expansion back out at `x`: returns lhs − rhs.
pub fn pieri_residual<C: Coefficients>(lam: &Partition, rule: PieriRule, coeffs: &C, x: &[C::T]) -> C::T {
    let empty = Partition::empty();
    let one_box = Partition::new(vec![1]).expect("partition");
    let poly = |nu: &Partition| match rule {
        PieriRule::SchurH1 => schur_gt_sum(nu, x).unwrap_or_else(|_| C::T::zero()),
        _ => macdonald(nu, &empty, x, coeffs, Which::P),
    };
    let factor = match rule {
        PieriRule::MacdonaldG1 => macdonald(&one_box, &empty, x, coeffs, Which::Q),
        _ => x.iter().cloned().fold(C::T::zero(), |a, b| a + b),
    };
    let lhs = factor * poly(lam);
    let rhs = pieri_apply(lam, rule, coeffs).into_iter().fold(C::T::zero(), |acc, (nu, c)| acc + c * poly(&nu));
    lhs - rhs
}
