//! Airy function from its contour integral, and the Airy₂ kernel.
//!
//! On the rays r e^{±iπ/3} the cubic term is −r³/3, and
//! (1/2πi) ∫ e^{z³/3 − xz} dz collapses to the real integral
//! (1/π) ∫₀^∞ e^{−r³/3 − xr/2} sin(π/3 − (√3/2) x r) dr.

use crate::quad::Quadrature;
use std::f64::consts::{FRAC_PI_3, PI};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Quadrature on [0, R] with R past the point where e^{−r³/3 − xr/2} is
/// negligible, and panels short enough to resolve the oscillation.
fn ray_rule(x: f64) -> Quadrature {
    let mut r: f64 = 0.5;
    while r * r * r / 3.0 + x * r / 2.0 < 44.0 {
        r += 0.25;
    }
    if x > 0.0 {
        // shrink towards the root of r³/3 + xr/2 = 44 for large x
        let (mut lo, mut hi) = (0.0, r);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if mid * mid * mid / 3.0 + x * mid / 2.0 < 44.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        r = hi;
    }
    let panels = ((r / 0.5).ceil() as usize).max((r * SQRT3_2 * x.abs()).ceil() as usize).max(4);
    Quadrature::composite(panels, 16, 0.0, r)
}

/// Ai(x) by Gauss–Legendre along the rotated rays.
pub fn airy(x: f64) -> f64 {
    ray_rule(x).integrate(|r| (-r * r * r / 3.0 - x * r / 2.0).exp() * (FRAC_PI_3 - SQRT3_2 * x * r).sin()) / PI
}

/// Ai′(x), differentiating under the same contour.
pub fn airy_prime(x: f64) -> f64 {
    -ray_rule(x).integrate(|r| r * (-r * r * r / 3.0 - x * r / 2.0).exp() * (2.0 * FRAC_PI_3 - SQRT3_2 * x * r).sin())
        / PI
}

/// Ai(0) = 1/(3^{2/3} Γ(2/3)) and −Ai′(0) = 1/(3^{1/3} Γ(1/3)).
pub const AI0: f64 = 0.355_028_053_887_817_2;
pub const AIP0: f64 = 0.258_819_403_792_806_8;

/// Maclaurin series Ai = c₁ f − c₂ g, accurate for moderate |x|.
pub fn airy_series(x: f64) -> f64 {
    let x3 = x * x * x;
    let (mut f, mut a) = (0.0, 1.0);
    let (mut g, mut b) = (0.0, x);
    for k in 0..200 {
        f += a;
        g += b;
        let k = k as f64;
        a *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
        b *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        if a.abs() + b.abs() < 1e-20 {
            break;
        }
    }
    AI0 * f - AIP0 * g
}

pub fn airy_prime_series(x: f64) -> f64 {
    let x3 = x * x * x;
    let (mut fp, mut d) = (0.0, x * x / 2.0);
    let (mut gp, mut e) = (0.0, 1.0);
    for k in 0..200 {
        fp += d;
        gp += e;
        let k = k as f64;
        d *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 5.0));
        e *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 1.0));
        if d.abs() + e.abs() < 1e-20 {
            break;
        }
    }
    AI0 * fp - AIP0 * gp
}

/// Airy₂ kernel from precomputed (Ai, Ai′) values.
pub(crate) fn airy2_from_values(x: f64, ax: (f64, f64), y: f64, ay: (f64, f64)) -> f64 {
    if x == y {
        ax.1 * ax.1 - x * ax.0 * ax.0
    } else {
        (ax.0 * ay.1 - ax.1 * ay.0) / (x - y)
    }
}

/// K(x, y) = (Ai(x)Ai′(y) − Ai′(x)Ai(y)) / (x − y), with the diagonal
/// limit Ai′(x)² − x Ai(x)².
pub fn airy2_kernel(x: f64, y: f64) -> f64 {
    airy2_from_values(x, (airy(x), airy_prime(x)), y, (airy(y), airy_prime(y)))
}

/// ∫₀^∞ Ai(λ + x) Ai(λ + y) dλ, cut where the integrand is below 1e−14.
pub fn airy2_kernel_integral(x: f64, y: f64) -> f64 {
    let len = (8.0 - x.min(y)).max(1.0);
    let q = Quadrature::composite((len / 0.5).ceil() as usize, 16, 0.0, len);
    q.integrate(|l| airy(l + x) * airy(l + y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn at_zero() {
        assert!((airy(0.0) - AI0).abs() < 1e-14);
        assert!((airy_prime(0.0) + AIP0).abs() < 1e-14);
    }

    #[test]
    fn decays() {
        let v = airy(10.0);
        assert!(v > 0.0 && v < 1e-9, "{v}");
        let mut prev = airy(0.0);
        for k in 1..=20 {
            let a = airy(k as f64 * 0.5);
            assert!(a < prev);
            prev = a;
        }
    }

    #[test]
    fn diagonal_positive() {
        for x in [-3.0, -1.0, 0.0, 1.5, 4.0] {
            assert!(airy2_kernel(x, x) > 0.0);
        }
    }
}
