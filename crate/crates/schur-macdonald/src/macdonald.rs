//! Macdonald P and Q polynomials by branching over interlacing chains.

use crate::coeffs::Coefficients;
use combinat_core::Partition;
use num_traits::{pow, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    P,
    Q,
}

/// P_{λ/μ}(x) or Q_{λ/μ}(x): the sum over chains μ = ν⁰ ≺ ν¹ ≺ … ≺ νᵏ = λ
/// of ∏ c_{νⁱ/νⁱ⁻¹} x_i^{|νⁱ| − |νⁱ⁻¹|}, with c = ψ for P and φ for Q.
pub fn macdonald<C: Coefficients>(lam: &Partition, mu: &Partition, x: &[C::T], coeffs: &C, which: Which) -> C::T {
    if !lam.contains(mu) {
        return C::T::zero();
    }
    descend(lam, mu, x, coeffs, which)
}

fn descend<C: Coefficients>(nu: &Partition, mu: &Partition, x: &[C::T], coeffs: &C, which: Which) -> C::T {
    let k = x.len();
    if k == 0 {
        return if nu == mu { num_traits::one() } else { C::T::zero() };
    }
    // each horizontal strip adds at most one row
    if nu.len() > mu.len() + k {
        return C::T::zero();
    }
    let coeff = |a: &Partition, b: &Partition| match which {
        Which::P => coeffs.psi(a, b),
        Which::Q => coeffs.phi(a, b),
    };
    let xk = &x[k - 1];
    let step = |below: &Partition| pow(xk.clone(), (nu.size() - below.size()) as usize) * coeff(nu, below);
    if k == 1 {
        return if nu.is_horizontal_strip_over(mu) { step(mu) } else { C::T::zero() };
    }
    let mut total = C::T::zero();
    for below in strips_below(nu, mu) {
        let c = step(&below);
        if c.is_zero() {
            continue;
        }
        total = total + c * descend(&below, mu, &x[..k - 1], coeffs, which);
    }
    total
}

/// All ν′ with μ ⊆ ν′ and ν/ν′ a horizontal strip.
fn strips_below(nu: &Partition, mu: &Partition) -> Vec<Partition> {
    let n = nu.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(nu: &Partition, mu: &Partition, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        let i = cur.len() + 1;
        if i > nu.len() {
            out.push(Partition::new(cur.clone()).expect("interlacing rows are partitions"));
            return;
        }
        for v in nu.part(i + 1).max(mu.part(i))..=nu.part(i) {
            cur.push(v);
            rec(nu, mu, cur, out);
            cur.pop();
        }
    }
    if n > 0 {
        rec(nu, mu, &mut cur, &mut out);
    } else {
        out.push(Partition::empty());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, ExactCoeffs, FloatCoeffs};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn one_box_is_power_sum() {
        let c = FloatCoeffs::new(0.37, 0.61).unwrap();
        let x = [0.2, 0.5, 0.9];
        let v = macdonald(&p(&[1]), &Partition::empty(), &x, &c, Which::P);
        assert!((v - 1.6).abs() < 1e-14);
    }

    #[test]
    fn empty_strip() {
        let c = FloatCoeffs::new(0.37, 0.61).unwrap();
        let lam = p(&[3, 1]);
        assert_eq!(macdonald(&lam, &lam, &[0.3, 0.4], &c, Which::Q), 1.0);
    }

    #[test]
    fn single_variable_closed_form() {
        let c = ExactCoeffs::q_t0(rat(1, 3));
        let (lam, mu) = (p(&[3, 1]), p(&[1]));
        let x = rat(2, 7);
        let v = macdonald(&lam, &mu, std::slice::from_ref(&x), &c, Which::Q);
        assert_eq!(v, c.phi(&lam, &mu) * &x * &x * &x);
    }

    #[test]
    fn strips_below_counts() {
        assert_eq!(strips_below(&p(&[2, 1]), &Partition::empty()).len(), 4);
        assert_eq!(strips_below(&p(&[2, 1]), &p(&[1, 1])).len(), 2);
    }
}
