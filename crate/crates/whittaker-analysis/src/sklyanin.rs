//! The Sklyanin density s_n(λ) = (2πi)^{−n} (n!)^{−1} ∏_{i≠j} Γ(λ_i − λ_j)^{−1}.

use crate::gamma::ln_gamma;
use crate::{Result, WhittakerError};
use num_complex::Complex64;
use std::f64::consts::PI;

fn prefactor(n: usize) -> Complex64 {
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    Complex64::new(0.0, 2.0 * PI).powu(n as u32).inv() / fact
}

pub fn sklyanin(lambda: &[Complex64]) -> Result<Complex64> {
    let mut log = Complex64::new(0.0, 0.0);
    for (i, a) in lambda.iter().enumerate() {
        for (j, b) in lambda.iter().enumerate() {
            if i != j {
                if a == b {
                    return Err(WhittakerError::Pole);
                }
                log -= ln_gamma(a - b);
            }
        }
    }
    Ok(prefactor(lambda.len()) * log.exp())
}

/// s_n at λ = i·y.
pub fn sklyanin_imag(y: &[f64]) -> Result<Complex64> {
    sklyanin(&y.iter().map(|&v| Complex64::new(0.0, v)).collect::<Vec<_>>())
}

/// ∏_{i<j} u sinh(πu)/π with u = y_i − y_j, which is ∏_{i≠j} 1/Γ(i(y_i − y_j))
/// by reflection and stays finite on the diagonal.
pub(crate) fn pair_product_imag(y: &[f64]) -> f64 {
    let mut p = 1.0;
    for i in 0..y.len() {
        for j in i + 1..y.len() {
            let u = y[i] - y[j];
            p *= u * (PI * u).sinh() / PI;
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_form_agrees() {
        for y in [[0.3, -1.1], [2.0, 0.5], [-4.0, 3.0]] {
            let s = sklyanin_imag(&y).unwrap() / prefactor(2);
            assert!((s.re / pair_product_imag(&y) - 1.0).abs() < 1e-12 && s.im.abs() < 1e-12 * s.re.abs());
        }
        let y = [0.4, -0.2, 1.3];
        let s = sklyanin_imag(&y).unwrap() / prefactor(3);
        assert!((s.re / pair_product_imag(&y) - 1.0).abs() < 1e-12);
    }
}
