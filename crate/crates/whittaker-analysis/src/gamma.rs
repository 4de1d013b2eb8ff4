//! Complex Γ through Stirling's series after shifting Re z up to 12.

use num_complex::Complex64;
use std::f64::consts::PI;

const SHIFT: f64 = 12.0;

// B_{2k} / (2k(2k − 1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// A logarithm of Γ(z). The imaginary part is not reduced to the principal
/// branch, so only exp of the result is meaningful. Poles give +∞.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        return Complex64::new(f64::INFINITY, 0.0);
    }
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    let mut prod = Complex64::new(1.0, 0.0);
    let mut k = 0;
    while z.re < SHIFT {
        prod *= z;
        z += 1.0;
        k += 1;
        if k % 8 == 0 {
            shift += prod.ln();
            prod = Complex64::new(1.0, 0.0);
        }
    }
    shift += prod.ln();
    let w = z.inv();
    let w2 = w * w;
    let mut tail = Complex64::new(0.0, 0.0);
    for c in STIRLING.iter().rev() {
        tail = tail * w2 + c;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + tail * w - shift
}

pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}

/// 1/Γ(z), zero at the poles.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        return Complex64::new(0.0, 0.0);
    }
    (-ln_gamma(z)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_and_half() {
        for n in 1..15 {
            let f: f64 = (1..n).map(|k| k as f64).product();
            let g = gamma(Complex64::new(n as f64, 0.0));
            assert!((g.re - f).abs() <= 1e-13 * f && g.im.abs() <= 1e-13 * f);
        }
        let h = gamma(Complex64::new(0.5, 0.0));
        assert!((h.re - PI.sqrt()).abs() < 1e-14);
        assert_eq!(rgamma(Complex64::new(-3.0, 0.0)), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn reflection_on_imaginary_axis() {
        // |Γ(iy)|² = π / (y sinh πy)
        for y in [0.1, 0.7, 3.0, 20.0] {
            let g = gamma(Complex64::new(0.0, y));
            let want = PI / (y * (PI * y).sinh());
            assert!((g.norm_sqr() / want - 1.0).abs() < 1e-12, "{y}");
        }
    }
}
