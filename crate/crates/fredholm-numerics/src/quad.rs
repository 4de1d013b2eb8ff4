//! Gauss–Legendre rules and simple domain maps.

/// Nodes and weights of the n-point Gauss–Legendre rule on [−1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (1.0, 0.0);
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) as f64 * z * p2 - (j - 1) as f64 * p3) / j as f64;
            }
            dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Quadrature {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Quadrature {
    pub fn legendre(n: usize, a: f64, b: f64) -> Self {
        let (x, w) = gauss_legendre(n);
        let (h, m) = ((b - a) / 2.0, (a + b) / 2.0);
        Quadrature { nodes: x.iter().map(|x| m + h * x).collect(), weights: w.iter().map(|w| h * w).collect() }
    }

    /// `panels` equal panels of `per` nodes each.
    pub fn composite(panels: usize, per: usize, a: f64, b: f64) -> Self {
        let step = (b - a) / panels as f64;
        let mut q = Quadrature { nodes: Vec::new(), weights: Vec::new() };
        for k in 0..panels {
            let p = Self::legendre(per, a + k as f64 * step, a + (k + 1) as f64 * step);
            q.nodes.extend(p.nodes);
            q.weights.extend(p.weights);
        }
        q
    }

    /// (start, ∞) through s = start + scale·v/(1 − v), Gauss–Legendre in v ∈ [0, 1).
    pub fn half_line(start: f64, scale: f64, n: usize) -> Self {
        let v = Self::legendre(n, 0.0, 1.0);
        let nodes = v.nodes.iter().map(|v| start + scale * v / (1.0 - v)).collect();
        let weights = v.nodes.iter().zip(&v.weights).map(|(v, w)| w * scale / ((1.0 - v) * (1.0 - v))).collect();
        Quadrature { nodes, weights }
    }

    /// Counting measure on start, start+1, …, start+len−1.
    pub fn integers(start: i64, len: usize) -> Self {
        Quadrature { nodes: (0..len as i64).map(|k| (start + k) as f64).collect(), weights: vec![1.0; len] }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_exact() {
        let q = Quadrature::legendre(5, 0.0, 2.0);
        // degree 9 is exact with 5 nodes
        assert!((q.integrate(|x| x.powi(9)) - 2f64.powi(10) / 10.0).abs() < 1e-11);
    }

    #[test]
    fn half_line_exponential() {
        let q = Quadrature::half_line(1.0, 4.0, 96);
        assert!((q.integrate(|x| (-x).exp()) - (-1f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn weights_sum() {
        for n in [1, 2, 7, 64, 200] {
            let (_, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13, "{n}");
        }
    }
}
