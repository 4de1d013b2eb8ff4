//! Branching coefficients φ, ψ and ψ′.

use crate::qpoch::{qpochhammer_finite, truncation_depth};
use crate::SymError;
use combinat_core::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, Num, One, Zero};

/// Supplies φ_{λ/μ}, ψ_{λ/μ} and ψ′_{λ/μ} in some scalar type. Non-strip
/// input gives zero.
pub trait Coefficients {
    type T: Num + Clone;
    fn phi(&self, lam: &Partition, mu: &Partition) -> Self::T;
    fn psi(&self, lam: &Partition, mu: &Partition) -> Self::T;
    fn psi_prime(&self, lam: &Partition, mu: &Partition) -> Self::T;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewCoeffs {
    pub phi: f64,
    pub psi: f64,
    pub psi_prime: f64,
}

/// Floating-point coefficients for generic (q, t).
#[derive(Debug, Clone, Copy)]
pub struct FloatCoeffs {
    pub q: f64,
    pub t: f64,
    pub eps: f64,
}

impl FloatCoeffs {
    pub fn new(q: f64, t: f64) -> Result<Self, SymError> {
        if !(q.abs() < 1.0) {
            return Err(SymError::QOutOfRange(q));
        }
        if !(t.abs() < 1.0) {
            return Err(SymError::QOutOfRange(t));
        }
        Ok(FloatCoeffs { q, t, eps: 1e-17 })
    }

    /// f(u) = (tu; q)_∞ / (qu; q)_∞, both products cut at the same depth.
    pub fn f(&self, u: f64) -> f64 {
        let (q, t) = (self.q, self.t);
        let depth = truncation_depth((t * u).abs().max((q * u).abs()), q, self.eps).max(1);
        qpochhammer_finite(t * u, q, depth) / qpochhammer_finite(q * u, q, depth)
    }

    fn arg(&self, qexp: i64, texp: usize) -> f64 {
        self.q.powi(qexp as i32) * self.t.powi(texp as i32)
    }
}

pub fn skew_coeffs(lam: &Partition, mu: &Partition, q: f64, t: f64) -> Result<SkewCoeffs, SymError> {
    let c = FloatCoeffs::new(q, t)?;
    Ok(SkewCoeffs { phi: c.phi(lam, mu), psi: c.psi(lam, mu), psi_prime: c.psi_prime(lam, mu) })
}

impl Coefficients for FloatCoeffs {
    type T = f64;

    fn phi(&self, lam: &Partition, mu: &Partition) -> f64 {
        if !lam.is_horizontal_strip_over(mu) {
            return 0.0;
        }
        let (l, m) = (|i| lam.part(i), |i| mu.part(i));
        let mut v = 1.0;
        for i in 1..=lam.len() {
            for j in i..=lam.len() {
                let d = j - i;
                v *= self.f(self.arg(l(i) - l(j), d)) * self.f(self.arg(m(i) - m(j + 1), d))
                    / (self.f(self.arg(l(i) - m(j), d)) * self.f(self.arg(m(i) - l(j + 1), d)));
            }
        }
        v
    }

    fn psi(&self, lam: &Partition, mu: &Partition) -> f64 {
        if !lam.is_horizontal_strip_over(mu) {
            return 0.0;
        }
        let (l, m) = (|i| lam.part(i), |i| mu.part(i));
        let mut v = 1.0;
        for i in 1..=mu.len() {
            for j in i..=mu.len() {
                let d = j - i;
                v *= self.f(self.arg(m(i) - m(j), d)) * self.f(self.arg(l(i) - l(j + 1), d))
                    / (self.f(self.arg(l(i) - m(j), d)) * self.f(self.arg(m(i) - l(j + 1), d)));
            }
        }
        v
    }

    fn psi_prime(&self, lam: &Partition, mu: &Partition) -> f64 {
        psi_prime_generic(lam, mu, &self.q, &self.t)
    }
}

/// ψ′ is a finite rational function of (q, t), so one routine serves every
/// scalar type.
fn psi_prime_generic<T: Num + Clone>(lam: &Partition, mu: &Partition, q: &T, t: &T) -> T {
    if !lam.is_vertical_strip_over(mu) {
        return T::zero();
    }
    let (l, m) = (|i| lam.part(i), |i| mu.part(i));
    let mono = |a: i64, b: usize| pow(q.clone(), a as usize) * pow(t.clone(), b);
    let one = T::one;
    let mut v = T::one();
    for j in 1..=lam.len() {
        if l(j) != m(j) + 1 {
            continue;
        }
        for i in 1..j {
            if l(i) != m(i) {
                continue;
            }
            let d = j - i;
            let num = (one() - mono(m(i) - m(j), d - 1)) * (one() - mono(l(i) - l(j), d + 1));
            let den = (one() - mono(m(i) - m(j), d)) * (one() - mono(l(i) - l(j), d));
            v = v * num / den;
        }
    }
    v
}

/// Exact rational coefficients. Only t = 0 and q = t are supported: in
/// both cases the f-ratios telescope into finite products.
#[derive(Debug, Clone)]
pub struct ExactCoeffs {
    q: BigRational,
    t: BigRational,
}

impl ExactCoeffs {
    pub fn new(q: BigRational, t: BigRational) -> Result<Self, SymError> {
        if !(t.is_zero() || q == t) {
            return Err(SymError::NotExact);
        }
        Ok(ExactCoeffs { q, t })
    }

    /// The Schur specialisation q = t (all φ, ψ equal 1).
    pub fn schur() -> Self {
        ExactCoeffs { q: BigRational::zero(), t: BigRational::zero() }.diag()
    }

    fn diag(mut self) -> Self {
        self.t = self.q.clone();
        self
    }

    pub fn q_t0(q: BigRational) -> Self {
        ExactCoeffs { q, t: BigRational::zero() }
    }

    fn is_diag(&self) -> bool {
        self.q == self.t
    }

    /// (q; q)_n.
    fn qq(&self, n: i64) -> BigRational {
        let mut v = BigRational::one();
        let mut qk = self.q.clone();
        for _ in 0..n {
            v *= BigRational::one() - &qk;
            qk *= &self.q;
        }
        v
    }
}

impl Coefficients for ExactCoeffs {
    type T = BigRational;

    fn phi(&self, lam: &Partition, mu: &Partition) -> BigRational {
        if !lam.is_horizontal_strip_over(mu) {
            return BigRational::zero();
        }
        if self.is_diag() {
            return BigRational::one();
        }
        let (l, m) = (|i| lam.part(i), |i| mu.part(i));
        (1..=lam.len())
            .map(|i| self.qq(m(i) - m(i + 1)) / (self.qq(l(i) - m(i)) * self.qq(m(i) - l(i + 1))))
            .fold(BigRational::one(), |a, b| a * b)
    }

    fn psi(&self, lam: &Partition, mu: &Partition) -> BigRational {
        if !lam.is_horizontal_strip_over(mu) {
            return BigRational::zero();
        }
        if self.is_diag() {
            return BigRational::one();
        }
        let (l, m) = (|i| lam.part(i), |i| mu.part(i));
        (1..=mu.len())
            .map(|i| self.qq(l(i) - l(i + 1)) / (self.qq(l(i) - m(i)) * self.qq(m(i) - l(i + 1))))
            .fold(BigRational::one(), |a, b| a * b)
    }

    fn psi_prime(&self, lam: &Partition, mu: &Partition) -> BigRational {
        psi_prime_generic(lam, mu, &self.q, &self.t)
    }
}

/// Convenience for tests: a/b as a BigRational.
pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_is_one() {
        let c = skew_coeffs(&p(&[3, 1]), &p(&[1]), 0.35, 0.35).unwrap();
        assert!((c.phi - 1.0).abs() < 1e-14 && (c.psi - 1.0).abs() < 1e-14);
    }

    #[test]
    fn t0_single_box() {
        let q: f64 = 0.3;
        // box added at row 2 of μ = (3, 1)
        let c = skew_coeffs(&p(&[3, 2]), &p(&[3, 1]), q, 0.0).unwrap();
        let want = (1.0 - q.powi(2)) / (1.0 - q);
        assert!((c.phi - want).abs() < 1e-14);
    }

    #[test]
    fn two_one_over_one_one_direct() {
        // direct f-products at t = 0: only i = j factors survive, f(u) = 1/(qu;q)_∞
        let q: f64 = 0.3;
        let f = |u: f64| 1.0 / (1..400).map(|k| 1.0 - u * q.powi(k)).product::<f64>();
        let c = skew_coeffs(&p(&[2, 1]), &p(&[1, 1]), q, 0.0).unwrap();
        // φ: i = 1: f(1) f(q^0) / (f(q) f(q^0)); i = 2: f(1) f(q) / (f(1) f(q))
        let phi = f(1.0) / f(q);
        // ψ: i = 1: f(1) f(q) / (f(q) f(1)); i = 2: f(1) f(q) / (f(1) f(q))
        assert!((c.phi - phi).abs() < 1e-14);
        assert!((c.psi - 1.0).abs() < 1e-14);
        let exact = ExactCoeffs::q_t0(rat(3, 10));
        assert_eq!(exact.phi(&p(&[2, 1]), &p(&[1, 1])), rat(1, 1) / (rat(1, 1) - rat(3, 10)));
    }

    #[test]
    fn non_strip_is_zero() {
        let c = skew_coeffs(&p(&[2, 2]), &p(&[1]), 0.3, 0.2).unwrap();
        assert_eq!(c.phi, 0.0);
        assert_eq!(c.psi, 0.0);
        assert_eq!(c.psi_prime, 0.0);
    }

    #[test]
    fn exact_needs_t0_or_diagonal() {
        assert!(ExactCoeffs::new(rat(1, 3), rat(1, 5)).is_err());
        assert!(ExactCoeffs::new(rat(1, 3), rat(1, 3)).is_ok());
    }

    #[test]
    fn single_box_psi_prime_relation() {
        let (q, t) = (0.4, 0.15);
        let mu = p(&[3, 1, 1]);
        for j in 1..=4 {
            let mut parts = mu.padded(4);
            parts[j - 1] += 1;
            let Ok(lam) = Partition::new(parts) else { continue };
            if !lam.contains(&mu) {
                continue;
            }
            let c = skew_coeffs(&lam, &mu, q, t).unwrap();
            // g₁ = (1−t)/(1−q) e₁ forces this direction of the ratio
            assert!((c.psi_prime - (1.0 - q) / (1.0 - t) * c.phi).abs() < 1e-12, "row {j}");
        }
    }
}
