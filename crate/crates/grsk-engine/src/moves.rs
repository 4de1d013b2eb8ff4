//! Geometric local moves, linear and log domain.

use rsk_engine::LocalRule;

/// (a, b; c, d) ↦ (bc / (a(b + c)), b; c, d(b + c)).
#[derive(Debug, Clone, Copy, Default)]
pub struct GeomRule;

impl LocalRule for GeomRule {
    type V = f64;
    fn interior(&self, a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
        let s = b + c;
        (b * c / (a * s), d * s)
    }
    fn interior_inv(&self, a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
        let s = b + c;
        (b * c / (a * s), d / s)
    }
    fn edge(&self, prev: f64, cur: f64) -> f64 {
        cur * prev
    }
    fn edge_inv(&self, prev: f64, cur: f64) -> f64 {
        cur / prev
    }
}

/// The same moves on logarithms, with log-sum-exp for b + c.
#[derive(Debug, Clone, Copy, Default)]
pub struct LogGeomRule;

pub fn log_add_exp(x: f64, y: f64) -> f64 {
    let m = x.max(y);
    m + (-(x - y).abs()).exp().ln_1p()
}

impl LocalRule for LogGeomRule {
    type V = f64;
    fn interior(&self, a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
        let s = log_add_exp(b, c);
        (b + c - a - s, d + s)
    }
    fn interior_inv(&self, a: f64, b: f64, c: f64, d: f64) -> (f64, f64) {
        let s = log_add_exp(b, c);
        (b + c - a - s, d - s)
    }
    fn edge(&self, prev: f64, cur: f64) -> f64 {
        cur + prev
    }
    fn edge_inv(&self, prev: f64, cur: f64) -> f64 {
        cur - prev
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_and_linear_agree() {
        let (a, b, c, d) = (0.7, 1.9, 0.3, 2.2);
        let (a1, d1) = GeomRule.interior(a, b, c, d);
        let (a2, d2) = LogGeomRule.interior(a.ln(), b.ln(), c.ln(), d.ln());
        assert!((a1.ln() - a2).abs() < 1e-14);
        assert!((d1.ln() - d2).abs() < 1e-14);
        let (a3, d3) = GeomRule.interior_inv(a1, b, c, d1);
        assert!((a3 - a).abs() < 1e-14 && (d3 - d).abs() < 1e-14);
    }

    #[test]
    fn log_add_exp_extremes() {
        assert_eq!(log_add_exp(1000.0, -1000.0), 1000.0);
        assert!((log_add_exp(0.0, 0.0) - 2f64.ln()).abs() < 1e-16);
    }
}
