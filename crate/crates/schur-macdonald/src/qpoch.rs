//! q-Pochhammer symbols.

use crate::SymError;

/// (a; q)_n = ∏_{i=1}^{n} (1 − a q^{i−1}).
pub fn qpochhammer_finite(a: f64, q: f64, n: usize) -> f64 {
    let mut p = 1.0;
    let mut aq = a;
    for _ in 0..n {
        p *= 1.0 - aq;
        aq *= q;
    }
    p
}

/// Number of factors after which |a q^k| < ε (1 − |q|).
pub(crate) fn truncation_depth(a: f64, q: f64, eps: f64) -> usize {
    let mut k = 0;
    let mut aq = a.abs();
    let stop = eps * (1.0 - q.abs());
    while aq >= stop && k < 100_000 {
        aq *= q.abs();
        k += 1;
    }
    k
}

/// (a; q)_∞ truncated once |a q^k| < ε (1 − |q|).
pub fn qpochhammer_inf(a: f64, q: f64, eps: f64) -> Result<f64, SymError> {
    if !(q.abs() < 1.0) {
        return Err(SymError::QOutOfRange(q));
    }
    Ok(qpochhammer_finite(a, q, truncation_depth(a, q, eps)))
}

/// Infinite symbol at machine precision.
pub fn qpochhammer(a: f64, q: f64) -> Result<f64, SymError> {
    qpochhammer_inf(a, q, 1e-17)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        assert_eq!(qpochhammer(0.0, 0.7).unwrap(), 1.0);
        assert_eq!(qpochhammer(0.3, 0.0).unwrap(), 0.7);
        assert!(qpochhammer(0.3, 1.0).is_err());
    }

    #[test]
    fn half_half() {
        // direct product with 200 factors is the oracle
        let direct: f64 = (0..200).map(|i| 1.0 - 0.5f64.powi(i + 1)).product();
        let v = qpochhammer(0.5, 0.5).unwrap();
        assert!((v - direct).abs() < 1e-12);
        assert!((v - 0.288_788_095_086_602_4).abs() < 1e-12);
    }

    #[test]
    fn euler_pentagonal() {
        // (q;q)_∞ = Σ (−1)^k q^{k(3k−1)/2}
        let q: f64 = 0.37;
        let series: f64 = (-30i32..=30).map(|k| (-1f64).powi(k) * q.powf((k * (3 * k - 1)) as f64 / 2.0)).sum();
        assert!((qpochhammer(q, q).unwrap() - series).abs() < 1e-14);
    }
}
