//! The inverse-gamma fixed point of (U, V, Y) ↦ (U′, V′, Y′), checked by
//! Kolmogorov–Smirnov tests.

use crate::{DynamicsError, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use statrs::distribution::{ContinuousCDF, Gamma as GammaLaw};
use statrs::function::beta::beta_reg;

/// U⁻¹ ~ Gamma(θ, r), V⁻¹ ~ Gamma(μ − θ, r), Y⁻¹ ~ Gamma(μ, r), independent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BurkeLaw {
    pub theta: f64,
    pub mu: f64,
    pub rate: f64,
}

impl BurkeLaw {
    fn validate(&self) -> Result<()> {
        if !(self.theta > 0.0 && self.mu > self.theta && self.rate > 0.0 && self.mu.is_finite() && self.rate.is_finite()) {
            return Err(DynamicsError::Config(format!("need 0 < θ < μ and r > 0, got {self:?}")));
        }
        Ok(())
    }

    fn shapes(&self) -> [f64; 3] {
        [self.theta, self.mu - self.theta, self.mu]
    }
}

pub fn burke_transform(u: f64, v: f64, y: f64) -> (f64, f64, f64) {
    (y * (1.0 + u / v), y * (1.0 + v / u), 1.0 / (1.0 / u + 1.0 / v))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BurkeReport {
    pub samples: usize,
    /// KS distances of U′, V′, Y′ against their reference marginals and of
    /// V′/Y′ against the beta-prime law it has when V′ and Y′ are
    /// independent with those marginals.
    pub ks: [f64; 4],
    /// 1% critical value 1.6276/√n.
    pub critical: f64,
}

impl BurkeReport {
    pub fn passes(&self) -> bool {
        self.ks.iter().all(|&d| d < self.critical)
    }
}

fn ks(mut xs: Vec<f64>, cdf: impl Fn(f64) -> f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter().enumerate().fold(0.0, |d: f64, (i, &x)| {
        let f = cdf(x);
        d.max(f - i as f64 / n).max((i + 1) as f64 / n - f)
    })
}

/// Transforms `samples` triples drawn from `input` and tests the output
/// against the stationary law `reference`.
pub fn burke_check(input: &BurkeLaw, reference: &BurkeLaw, samples: usize, seed: u64) -> Result<BurkeReport> {
    input.validate()?;
    reference.validate()?;
    if samples < 100 {
        return Err(DynamicsError::Config(format!("{samples} samples is too few for a KS test")));
    }
    let draw = |shape: f64| Gamma::new(shape, 1.0 / input.rate).expect("validated");
    let [gu, gv, gy] = input.shapes().map(draw);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = [vec![], vec![], vec![], vec![]];
    for _ in 0..samples {
        let u = 1.0 / gu.sample(&mut rng);
        let v = 1.0 / gv.sample(&mut rng);
        let y = 1.0 / gy.sample(&mut rng);
        let (u2, v2, y2) = burke_transform(u, v, y);
        out[0].push(u2);
        out[1].push(v2);
        out[2].push(y2);
        out[3].push(v2 / y2);
    }
    let [a, b, c] = reference.shapes();
    let inv = |shape: f64| {
        let g = GammaLaw::new(shape, reference.rate).expect("validated");
        move |w: f64| 1.0 - g.cdf(1.0 / w)
    };
    let [o0, o1, o2, o3] = out;
    let ks = [
        ks(o0, inv(a)),
        ks(o1, inv(b)),
        ks(o2, inv(c)),
        // Y′⁻¹ / V′⁻¹ with Gamma(μ) over Gamma(μ − θ)
        ks(o3, |s| beta_reg(c, b, s / (1.0 + s))),
    ];
    Ok(BurkeReport { samples, ks, critical: 1.6276 / (samples as f64).sqrt() })
}
