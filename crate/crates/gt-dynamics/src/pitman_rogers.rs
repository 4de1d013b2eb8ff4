//! Monte Carlo version of the Pitman–Rogers criterion: run Poisson-RSK from
//! Z₀ ~ K(λ₀, ·) and compare the law of the bottom row with a direct
//! simulation of the Doob walk from λ₀.

use crate::rates::poisson_rsk_jump;
use crate::simulate::pick;
use crate::{check_pattern, DynamicsError, Result};
use combinat_core::{GtPattern, Partition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};
use rayon::prelude::*;
use schur_macdonald::schur_gt_sum;
use std::collections::HashMap;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum InitialLaw {
    /// Z₀ ~ K(λ₀, ·), the correct start.
    Links,
    /// A fixed pattern with bottom row λ₀; generally violates the
    /// hypothesis and serves as a negative control.
    Fixed(GtPattern<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checkpoint {
    pub time: f64,
    /// Total variation distance between the two empirical laws.
    pub tv: f64,
    /// Mean and sd of the TV statistic when both samples share one law,
    /// from a normal approximation per cell at the pooled frequencies.
    pub null_mean: f64,
    pub null_sd: f64,
    pub z: f64,
}

impl Checkpoint {
    pub fn within(&self, sigmas: f64) -> bool {
        self.z <= sigmas
    }
}

type Counts = Vec<HashMap<Vec<i64>, u64>>;

fn merge(mut a: Counts, b: Counts) -> Counts {
    for (ha, hb) in a.iter_mut().zip(b) {
        for (k, v) in hb {
            *ha.entry(k).or_default() += v;
        }
    }
    a
}

/// Categorical sampler over the patterns with bottom row λ₀, weights ∏ x_i^{type_i}.
struct LinkSampler {
    patterns: Vec<GtPattern<i64>>,
    cdf: Vec<f64>,
}

impl LinkSampler {
    fn new(lambda: &[i64], x: &[f64]) -> Self {
        let patterns = GtPattern::with_bottom_row(lambda);
        let mut acc = 0.0;
        let mut cdf = Vec::with_capacity(patterns.len());
        for z in &patterns {
            let (_, ty) = z.shape_and_type().expect("enumerated patterns are valid");
            acc += ty.iter().zip(x).map(|(&e, xi)| xi.powi(e as i32)).product::<f64>();
            cdf.push(acc);
        }
        LinkSampler { patterns, cdf }
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> GtPattern<i64> {
        let u = rng.random::<f64>() * self.cdf[self.cdf.len() - 1];
        let k = self.cdf.partition_point(|&c| c <= u).min(self.patterns.len() - 1);
        self.patterns[k].clone()
    }
}

struct Doob<'a> {
    x: &'a [f64],
    total: f64,
    schur: HashMap<Vec<i64>, f64>,
}

impl Doob<'_> {
    fn s(&mut self, lam: &[i64]) -> f64 {
        if lam.windows(2).any(|w| w[0] < w[1]) {
            return 0.0;
        }
        if let Some(&v) = self.schur.get(lam) {
            return v;
        }
        let p = Partition::new(lam.to_vec()).expect("chamber point");
        let v = schur_gt_sum(&p, self.x).expect("length fits");
        self.schur.insert(lam.to_vec(), v);
        v
    }

    /// One jump of the Doob walk; the rates s_{λ+e_i}/s_λ sum to Σx.
    fn jump<R: Rng>(&mut self, lam: &mut [i64], rng: &mut R) {
        let mut u = rng.random::<f64>() * self.s(lam) * self.total;
        let mut last = 0;
        for i in 0..lam.len() {
            lam[i] += 1;
            let w = self.s(lam);
            lam[i] -= 1;
            if w > 0.0 {
                last = i;
                if u < w {
                    break;
                }
                u -= w;
            }
        }
        lam[last] += 1;
    }
}

/// Advances a constant-rate clock to time t; the overshoot is dropped,
/// which is exact by memorylessness.
fn advance<R: Rng>(now: &mut f64, t: f64, total: f64, rng: &mut R, mut jump: impl FnMut(&mut R)) {
    loop {
        let e: f64 = Exp1.sample(rng);
        if *now + e / total > t {
            *now = t;
            return;
        }
        *now += e / total;
        jump(rng);
    }
}

struct Run<'a> {
    x: &'a [f64],
    lambda0: &'a [i64],
    times: &'a [f64],
    seed: u64,
    initial: &'a InitialLaw,
    links: &'a LinkSampler,
}

impl Run<'_> {
    fn chunk(&self, chunk: u64, count: usize) -> (Counts, Counts) {
        let x = self.x;
        let total: f64 = x.iter().sum();
        let mut gt: Counts = vec![HashMap::new(); self.times.len()];
        let mut walk: Counts = vec![HashMap::new(); self.times.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(2 * chunk);
        let mut rng2 = ChaCha8Rng::seed_from_u64(self.seed);
        rng2.set_stream(2 * chunk + 1);
        let mut doob = Doob { x, total, schur: HashMap::new() };
        for _ in 0..count {
            let mut z = match self.initial {
                InitialLaw::Links => self.links.draw(&mut rng),
                InitialLaw::Fixed(z) => z.clone(),
            };
            let mut now = 0.0;
            for (slot, &t) in self.times.iter().enumerate() {
                advance(&mut now, t, total, &mut rng, |r| {
                    let level = pick(x.iter().copied(), total, r);
                    poisson_rsk_jump(&mut z, level + 1);
                });
                *gt[slot].entry(z.bottom().to_vec()).or_default() += 1;
            }
            let mut lam = self.lambda0.to_vec();
            let mut now = 0.0;
            for (slot, &t) in self.times.iter().enumerate() {
                advance(&mut now, t, total, &mut rng2, |r| doob.jump(&mut lam, r));
                *walk[slot].entry(lam.clone()).or_default() += 1;
            }
        }
        (gt, walk)
    }
}

fn checkpoint(time: f64, a: &HashMap<Vec<i64>, u64>, b: &HashMap<Vec<i64>, u64>, r: f64) -> Checkpoint {
    let mut keys: Vec<&Vec<i64>> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    let (mut tv, mut mean, mut var) = (0.0, 0.0, 0.0);
    for k in keys {
        let pa = *a.get(k).unwrap_or(&0) as f64 / r;
        let pb = *b.get(k).unwrap_or(&0) as f64 / r;
        tv += 0.5 * (pa - pb).abs();
        // p̂a − p̂b ≈ N(0, 2p̄(1−p̄)/R) under the null; E|N| = σ√(2/π)
        let pbar = 0.5 * (pa + pb);
        let s2 = 2.0 * pbar * (1.0 - pbar) / r;
        mean += 0.5 * s2.sqrt() * (2.0 / std::f64::consts::PI).sqrt();
        var += 0.25 * s2 * (1.0 - 2.0 / std::f64::consts::PI);
    }
    let sd = var.sqrt();
    let z = if sd > 0.0 { (tv - mean) / sd } else if tv == 0.0 { 0.0 } else { f64::INFINITY };
    Checkpoint { time, tv, null_mean: mean, null_sd: sd, z }
}

/// TV distance between the bottom row of Poisson-RSK and the Doob walk at
/// each checkpoint time (ascending).
pub fn pitman_rogers_distance(
    x: &[f64],
    lambda0: &[i64],
    times: &[f64],
    replicas: usize,
    seed: u64,
    initial: &InitialLaw,
) -> Result<Vec<Checkpoint>> {
    if replicas < 1000 {
        return Err(DynamicsError::TooFewReplicas(replicas));
    }
    if x.is_empty() || x.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
        return Err(DynamicsError::Config("rates must be positive".into()));
    }
    if lambda0.len() != x.len() || lambda0.windows(2).any(|w| w[0] < w[1]) || lambda0.iter().any(|&v| v < 0) {
        return Err(DynamicsError::Chamber(lambda0.to_vec()));
    }
    if times.iter().any(|t| !(t.is_finite() && *t >= 0.0)) || times.windows(2).any(|w| w[0] > w[1]) {
        return Err(DynamicsError::Config("checkpoint times must be ascending and ≥ 0".into()));
    }
    if let InitialLaw::Fixed(z) = initial {
        check_pattern(z)?;
        if z.depth() != x.len() || z.bottom() != lambda0 {
            return Err(DynamicsError::Config("fixed start must have bottom row λ₀".into()));
        }
    }
    let links = LinkSampler::new(lambda0, x);
    let run = Run { x, lambda0, times, seed, initial, links: &links };
    let chunks = replicas.div_ceil(CHUNK);
    let empty = || (vec![HashMap::new(); times.len()], vec![HashMap::new(); times.len()]);
    let (gt, walk) = (0..chunks)
        .into_par_iter()
        .map(|c| run.chunk(c as u64, CHUNK.min(replicas - c * CHUNK)))
        .reduce(empty, |a, b| (merge(a.0, b.0), merge(a.1, b.1)));
    let r = replicas as f64;
    Ok(times.iter().enumerate().map(|(k, &t)| checkpoint(t, &gt[k], &walk[k], r)).collect())
}
