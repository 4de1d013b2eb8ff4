//! Exact event simulation (competing exponential clocks).

use crate::rates::{poisson_rsk_jump, qrsk_step, qwhittaker_jump, qwhittaker_rates};
use crate::{check_pattern, DynamicsError, Result};
use combinat_core::GtPattern;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    PoissonRsk,
    QRsk,
    QWhittaker,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynamicsConfig {
    pub model: Model,
    pub x: Vec<f64>,
    pub q: f64,
    pub horizon: f64,
    pub seed: u64,
    /// All-zero pattern when absent.
    pub initial: Option<GtPattern<i64>>,
    pub max_events: usize,
}

impl DynamicsConfig {
    pub fn new(model: Model, x: &[f64], horizon: f64, seed: u64) -> Self {
        DynamicsConfig { model, x: x.to_vec(), q: 0.0, horizon, seed, initial: None, max_events: 1_000_000 }
    }

    pub fn with_q(mut self, q: f64) -> Self {
        self.q = q;
        self
    }

    pub fn with_initial(mut self, z: GtPattern<i64>) -> Self {
        self.initial = Some(z);
        self
    }

    fn validate(&self) -> Result<GtPattern<i64>> {
        let n = self.x.len();
        if n == 0 {
            return Err(DynamicsError::Config("depth must be positive".into()));
        }
        if self.x.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
            return Err(DynamicsError::Config("rates must be positive".into()));
        }
        if !(0.0..1.0).contains(&self.q) {
            return Err(DynamicsError::Config(format!("q = {} outside [0, 1)", self.q)));
        }
        if !(self.horizon >= 0.0 && self.horizon.is_finite()) {
            return Err(DynamicsError::Config("horizon must be finite and ≥ 0".into()));
        }
        let z = self.initial.clone().unwrap_or_else(|| GtPattern::filled(n, n, 0));
        if z.depth() != n || z.width() != n {
            return Err(DynamicsError::Config("initial pattern depth differs from the number of rates".into()));
        }
        check_pattern(&z)?;
        Ok(z)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Event {
    pub time: f64,
    /// (i, j) of the particle whose clock rang.
    pub level: usize,
    pub index: usize,
    pub pattern: GtPattern<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub initial: GtPattern<i64>,
    pub events: Vec<Event>,
    pub horizon: f64,
}

impl Trajectory {
    pub fn final_pattern(&self) -> &GtPattern<i64> {
        self.events.last().map(|e| &e.pattern).unwrap_or(&self.initial)
    }

    /// Pattern in force at time t.
    pub fn at(&self, t: f64) -> &GtPattern<i64> {
        let k = self.events.partition_point(|e| e.time <= t);
        if k == 0 {
            &self.initial
        } else {
            &self.events[k - 1].pattern
        }
    }

    /// The diagonal (z^1_1, z^2_2, …, z^n_n) after every event: the q-TASEP
    /// (push-TASEP when q = 0) marginal.
    pub fn diagonal(&self) -> Vec<(f64, Vec<i64>)> {
        let diag = |z: &GtPattern<i64>| (1..=z.depth()).map(|k| *z.get(k, k)).collect();
        std::iter::once((0.0, diag(&self.initial))).chain(self.events.iter().map(|e| (e.time, diag(&e.pattern)))).collect()
    }
}

/// One event: returns the waiting time and the initiating particle, and
/// updates `z`.
pub(crate) fn step<R: Rng + ?Sized>(
    model: Model,
    x: &[f64],
    q: f64,
    z: &mut GtPattern<i64>,
    rng: &mut R,
) -> (f64, usize, usize) {
    match model {
        Model::PoissonRsk | Model::QRsk => {
            let total: f64 = x.iter().sum();
            let e: f64 = Exp1.sample(rng);
            let dt = e / total;
            let level = pick(x.iter().copied(), total, rng);
            if model == Model::PoissonRsk {
                poisson_rsk_jump(z, level + 1);
            } else {
                *z = qrsk_step(z, level + 1, 1, q, rng);
            }
            (dt, level + 1, 1)
        }
        Model::QWhittaker => {
            let rates = qwhittaker_rates(z, x, q);
            let total: f64 = rates.iter().map(|r| r.rate).sum();
            let e: f64 = Exp1.sample(rng);
            let dt = e / total;
            let r = rates[pick(rates.iter().map(|r| r.rate), total, rng)];
            qwhittaker_jump(z, r.level, r.index);
            (dt, r.level, r.index)
        }
    }
}

pub(crate) fn pick<R: Rng + ?Sized>(w: impl Iterator<Item = f64> + Clone, total: f64, rng: &mut R) -> usize {
    let u = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut last = 0;
    for (k, v) in w.enumerate() {
        if v > 0.0 {
            last = k;
            acc += v;
            if u < acc {
                return k;
            }
        }
    }
    last
}

pub fn simulate(cfg: &DynamicsConfig) -> Result<Trajectory> {
    let mut z = cfg.validate()?;
    let initial = z.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut events = Vec::new();
    let mut t = 0.0;
    loop {
        let (dt, level, index) = step(cfg.model, &cfg.x, cfg.q, &mut z, &mut rng);
        t += dt;
        if t > cfg.horizon {
            break;
        }
        if events.len() == cfg.max_events {
            return Err(DynamicsError::EventCap(cfg.max_events));
        }
        events.push(Event { time: t, level, index, pattern: z.clone() });
    }
    Ok(Trajectory { initial, events, horizon: cfg.horizon })
}
