//! Transition kernels on truncated state spaces (all entries ≤ M) and exact
//! checks of the intertwining K Π = P K.
//!
//! Every entry of K Π and P K at a pair (λ, Z̃) only involves patterns with
//! bottom row λ or z̃^n, so both sides are computed exactly for all pairs
//! inside the truncation. Truncation only shows up as mass (or rate) that
//! leaves the state space, reported per row.

use crate::doob::doob_rates;
use crate::rates::poisson_rsk_jump;
use crate::{DynamicsError, Result};
use combinat_core::gt::interlacing_rows_below;
use combinat_core::{GtPattern, Partition};
use num_rational::BigRational;
use num_traits::{pow, One, Signed, ToPrimitive, Zero};
use schur_macdonald::{macdonald, qpochhammer, schur_gt_sum, Coefficients, ExactCoeffs, FloatCoeffs, Which};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedKernel<T> {
    pub states: Vec<GtPattern<i64>>,
    /// Sparse rows of (target index, weight).
    pub rows: Vec<Vec<(usize, T)>>,
    /// Mass or rate of each row that leaves the truncation.
    pub leak: Vec<f64>,
}

impl<T> TruncatedKernel<T> {
    pub fn index(&self) -> HashMap<Vec<i64>, usize> {
        self.states.iter().enumerate().map(|(k, z)| (z.entries().to_vec(), k)).collect()
    }
}

/// All depth-n patterns with entries ≤ m, grouped by bottom row.
fn enumerate(n: usize, m: i64) -> Vec<GtPattern<i64>> {
    let mut out = Vec::new();
    for lam in Partition::all_in_box(n, m) {
        out.extend(GtPattern::with_bottom_row(&lam.padded(n)));
    }
    out
}

fn sum_row(z: &[i64]) -> i64 {
    z.iter().sum()
}

/// Poisson-RSK generator with rates x, diagonal −Σx included.
pub fn schur_generator(x: &[BigRational], m: i64) -> TruncatedKernel<BigRational> {
    let n = x.len();
    let states = enumerate(n, m);
    let mut k = TruncatedKernel { states, rows: Vec::new(), leak: Vec::new() };
    let index = k.index();
    let total = x.iter().fold(BigRational::zero(), |a, b| a + b);
    for (s, z) in k.states.iter().enumerate() {
        let mut row = vec![(s, -total.clone())];
        let mut leak = 0.0;
        for i in 1..=n {
            let mut t = z.clone();
            poisson_rsk_jump(&mut t, i);
            match index.get(t.entries()) {
                Some(&u) => row.push((u, x[i - 1].clone())),
                None => leak += x[i - 1].to_f64().unwrap_or(f64::NAN),
            }
        }
        k.rows.push(row);
        k.leak.push(leak);
    }
    k
}

/// Macdonald building blocks with cached P_ν(x_1..x_k).
struct Mac<'a, C: Coefficients> {
    c: &'a C,
    x: &'a [C::T],
    rho: C::T,
    p: HashMap<(usize, Vec<i64>), C::T>,
}

fn part(row: &[i64]) -> Partition {
    Partition::new(row.to_vec()).expect("pattern rows are partitions")
}

impl<C: Coefficients> Mac<'_, C> {
    fn poly(&mut self, k: usize, row: &[i64]) -> C::T {
        let key = (k, row.to_vec());
        if let Some(v) = self.p.get(&key) {
            return v.clone();
        }
        let v = macdonald(&part(row), &Partition::empty(), &self.x[..k], self.c, Which::P);
        self.p.insert(key, v.clone());
        v
    }

    /// Λ^k_{k−1}(μ, ν) = P_ν(x_1..x_{k−1}) ψ_{μ/ν} x_k^{|μ|−|ν|} / P_μ(x_1..x_k).
    fn link(&mut self, k: usize, mu: &[i64], nu: &[i64]) -> C::T {
        let psi = self.c.psi(&part(mu), &part(nu));
        if psi.is_zero() {
            return psi;
        }
        let xk = pow(self.x[k - 1].clone(), (sum_row(mu) - sum_row(nu)) as usize);
        self.poly(k - 1, nu) * psi * xk / self.poly(k, mu)
    }

    /// H(x_1..x_k; ρ) · P_k(μ, ν) = P_ν φ_{ν/μ} ρ^{|ν|−|μ|} / P_μ.
    fn step(&mut self, k: usize, mu: &[i64], nu: &[i64]) -> C::T {
        let phi = self.c.phi(&part(nu), &part(mu));
        if phi.is_zero() {
            return phi;
        }
        let r = pow(self.rho.clone(), (sum_row(nu) - sum_row(mu)) as usize);
        self.poly(k, nu) * phi * r / self.poly(k, mu)
    }

    /// H(x_1..x_{k−1}; ρ) · Δ^k_{k−1}(λ, ν) = Σ_μ Λ^k_{k−1}(λ, μ) · H P_{k−1}(μ, ν).
    fn delta(&mut self, k: usize, lam: &[i64], nu: &[i64]) -> C::T {
        let mut s = C::T::zero();
        for mu in interlacing_rows_below(lam) {
            let l = self.link(k, lam, &mu);
            if !l.is_zero() {
                s = s + l * self.step(k - 1, &mu, nu);
            }
        }
        s
    }

    /// H(x; ρ) · Π_ρ(Z, Z̃).
    fn pi(&mut self, z: &GtPattern<i64>, t: &GtPattern<i64>) -> C::T {
        let mut w = self.step(1, z.row(1), t.row(1));
        for k in 2..=z.depth() {
            if w.is_zero() {
                return w;
            }
            let d = self.delta(k, z.row(k), t.row(k - 1));
            if d.is_zero() {
                return d;
            }
            w = w * self.step(k, z.row(k), t.row(k)) * self.link(k, t.row(k), t.row(k - 1)) / d;
        }
        w
    }

    /// K(λ, Z) = ∏_k Λ^k_{k−1}(z^k, z^{k−1}).
    fn k(&mut self, z: &GtPattern<i64>) -> C::T {
        let mut w = C::T::one();
        for k in 2..=z.depth() {
            w = w * self.link(k, z.row(k), z.row(k - 1));
        }
        w
    }
}

/// H(x; ρ) = ∏_k (tρx_k; q)_∞ / (ρx_k; q)_∞ in floating point.
fn h_float(x: &[f64], q: f64, t: f64, rho: f64) -> Result<f64> {
    let mut h = 1.0;
    for &xk in x {
        h *= qpochhammer(t * rho * xk, q)? / qpochhammer(rho * xk, q)?;
    }
    Ok(h)
}

/// The ρ-kernel Π_ρ scaled by H(x; ρ) (which makes it rational at t = 0);
/// leak is 1 − Σ_{Z̃ inside} Π_ρ(Z, Z̃).
pub fn macdonald_kernel<C: Coefficients>(
    coeffs: &C,
    x: &[C::T],
    rho: C::T,
    qt: (f64, f64),
    m: i64,
) -> Result<TruncatedKernel<C::T>>
where
    C::T: ToPrimitive,
{
    let xf: Vec<f64> = x.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect();
    let h = h_float(&xf, qt.0, qt.1, rho.to_f64().unwrap_or(f64::NAN))?;
    let mut mac = Mac { c: coeffs, x, rho, p: HashMap::new() };
    let states = enumerate(x.len(), m);
    let mut rows = Vec::new();
    let mut leak = Vec::new();
    for z in &states {
        let mut row = Vec::new();
        let mut mass = 0.0;
        for (u, t) in states.iter().enumerate() {
            let w = mac.pi(z, t);
            if !w.is_zero() {
                mass += w.to_f64().unwrap_or(f64::NAN);
                row.push((u, w));
            }
        }
        rows.push(row);
        leak.push(1.0 - mass / h);
    }
    Ok(TruncatedKernel { states, rows, leak })
}

#[derive(Debug, Clone, PartialEq)]
pub enum KernelModel {
    /// Poisson-RSK generator with the Schur intertwiner and Doob walk.
    Schur { x: Vec<BigRational> },
    /// Macdonald ρ-kernel at t = 0.
    MacdonaldT0 { x: Vec<BigRational>, q: BigRational, rho: BigRational },
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntertwiningReport {
    /// max |K Π − P K| over all (λ, Z̃) in the truncation.
    pub residual: f64,
    pub exact_zero: bool,
    pub rows: usize,
    pub pairs: usize,
    /// Rows of Π with mass leaving the truncation.
    pub boundary_rows: usize,
    pub max_leak: f64,
    /// Largest |Σ_ν P(λ, ν)| over interior rows (0 for a generator whose
    /// rows conserve rate).
    pub interior_row_defect: f64,
}

struct Compare<T> {
    lhs: HashMap<(Vec<i64>, usize), T>,
    rhs: HashMap<(Vec<i64>, usize), T>,
}

impl<T: Clone + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + Zero + Signed + ToPrimitive> Compare<T> {
    fn new() -> Self {
        Compare { lhs: HashMap::new(), rhs: HashMap::new() }
    }

    fn add(map: &mut HashMap<(Vec<i64>, usize), T>, key: (Vec<i64>, usize), v: T) {
        let e = map.entry(key).or_insert_with(T::zero);
        *e = e.clone() + v;
    }

    fn finish(self) -> (f64, bool, usize) {
        let mut keys: Vec<_> = self.lhs.keys().chain(self.rhs.keys()).cloned().collect();
        keys.sort();
        keys.dedup();
        let (mut worst, mut zero) = (0.0f64, true);
        for key in &keys {
            let a = self.lhs.get(key).cloned().unwrap_or_else(T::zero);
            let b = self.rhs.get(key).cloned().unwrap_or_else(T::zero);
            let d = (a - b).abs();
            zero &= d.is_zero();
            worst = worst.max(d.to_f64().unwrap_or(f64::INFINITY));
        }
        (worst, zero, keys.len())
    }
}

fn bottoms(states: &[GtPattern<i64>]) -> HashMap<Vec<i64>, Vec<usize>> {
    let mut by: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
    for (k, z) in states.iter().enumerate() {
        by.entry(z.bottom().to_vec()).or_default().push(k);
    }
    by
}

fn schur_residual(x: &[BigRational], m: i64) -> Result<IntertwiningReport> {
    let gen = schur_generator(x, m);
    let by = bottoms(&gen.states);
    let mut s_cache: HashMap<Vec<i64>, BigRational> = HashMap::new();
    let mut schur = |l: &[i64]| -> Result<BigRational> {
        if let Some(v) = s_cache.get(l) {
            return Ok(v.clone());
        }
        let v = schur_gt_sum(&part(l), x)?;
        s_cache.insert(l.to_vec(), v.clone());
        Ok(v)
    };
    // K(λ, Z) = ∏ x_i^{|z^i| − |z^{i−1}|} / s_λ(x)
    let mut kern = |z: &GtPattern<i64>| -> Result<BigRational> {
        let (_, ty) = z.shape_and_type().expect("valid");
        let w = ty.iter().zip(x).fold(BigRational::one(), |a, (&e, xi)| a * pow(xi.clone(), e as usize));
        Ok(w / schur(z.bottom())?)
    };
    let mut cmp = Compare::new();
    let mut defect = BigRational::zero();
    let mut lams: Vec<&Vec<i64>> = by.keys().collect();
    lams.sort();
    for lam in lams {
        for &s in &by[lam] {
            let kz = kern(&gen.states[s])?;
            for (u, w) in &gen.rows[s] {
                Compare::add(&mut cmp.lhs, (lam.clone(), *u), kz.clone() * w);
            }
        }
        // Doob generator with its full diagonal
        let moves = doob_rates(lam, x)?;
        let out: BigRational = moves.iter().fold(BigRational::zero(), |a, (_, r)| a + r);
        let total = x.iter().fold(BigRational::zero(), |a, b| a + b);
        if lam[0] < m {
            defect = defect.max((out.clone() - total).abs());
        }
        let mut targets = vec![(lam.clone(), -out)];
        targets.extend(moves);
        for (nu, p) in targets {
            if let Some(list) = by.get(&nu) {
                for &u in list {
                    let v = p.clone() * kern(&gen.states[u])?;
                    Compare::add(&mut cmp.rhs, (lam.clone(), u), v);
                }
            }
        }
    }
    let rows = by.len();
    let (residual, exact_zero, pairs) = cmp.finish();
    Ok(IntertwiningReport {
        residual,
        exact_zero,
        rows,
        pairs,
        boundary_rows: gen.leak.iter().filter(|&&l| l > 0.0).count(),
        max_leak: gen.leak.iter().cloned().fold(0.0, f64::max),
        interior_row_defect: defect.to_f64().unwrap_or(f64::NAN),
    })
}

fn mac_residual<C: Coefficients>(c: &C, x: &[C::T], rho: C::T, qt: (f64, f64), m: i64) -> Result<IntertwiningReport>
where
    C::T: Signed + ToPrimitive,
{
    let kernel = macdonald_kernel(c, x, rho.clone(), qt, m)?;
    let by = bottoms(&kernel.states);
    let mut mac = Mac { c, x, rho, p: HashMap::new() };
    let n = x.len();
    let mut cmp = Compare::new();
    let mut lams: Vec<&Vec<i64>> = by.keys().collect();
    lams.sort();
    for lam in lams {
        for &s in &by[lam] {
            let kz = mac.k(&kernel.states[s]);
            for (u, w) in &kernel.rows[s] {
                Compare::add(&mut cmp.lhs, (lam.clone(), *u), kz.clone() * w.clone());
            }
        }
        for (nu, list) in &by {
            let p = mac.step(n, lam, nu);
            if p.is_zero() {
                continue;
            }
            for &u in list {
                let v = p.clone() * mac.k(&kernel.states[u]);
                Compare::add(&mut cmp.rhs, (lam.clone(), u), v);
            }
        }
    }
    let rows = by.len();
    let (residual, exact_zero, pairs) = cmp.finish();
    Ok(IntertwiningReport {
        residual,
        exact_zero,
        rows,
        pairs,
        boundary_rows: kernel.leak.iter().filter(|&&l| l > 0.0).count(),
        max_leak: kernel.leak.iter().cloned().fold(0.0, f64::max),
        interior_row_defect: 0.0,
    })
}

/// Exact intertwining residual on patterns of depth n with entries ≤ m.
pub fn intertwining_residual(model: &KernelModel, n: usize, m: i64) -> Result<IntertwiningReport> {
    if m < 1 {
        return Err(DynamicsError::Truncation(m));
    }
    let x = match model {
        KernelModel::Schur { x } | KernelModel::MacdonaldT0 { x, .. } => x,
    };
    if x.len() != n || n == 0 {
        return Err(DynamicsError::Config(format!("{} rates for depth {n}", x.len())));
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(DynamicsError::Config("rates must be positive".into()));
    }
    match model {
        KernelModel::Schur { x } => schur_residual(x, m),
        KernelModel::MacdonaldT0 { x, q, rho } => {
            if !(q.is_positive() && q < &BigRational::one()) || !rho.is_positive() {
                return Err(DynamicsError::Config("need 0 < q < 1 and ρ > 0".into()));
            }
            let qf = q.to_f64().unwrap_or(f64::NAN);
            mac_residual(&ExactCoeffs::q_t0(q.clone()), x, rho.clone(), (qf, 0.0), m)
        }
    }
}

/// Floating-point residual of the Macdonald intertwining for general (q, t).
pub fn macdonald_intertwining_float(x: &[f64], q: f64, t: f64, rho: f64, m: i64) -> Result<IntertwiningReport> {
    if m < 1 {
        return Err(DynamicsError::Truncation(m));
    }
    let c = FloatCoeffs::new(q, t)?;
    mac_residual(&c, x, rho, (q, t), m)
}
