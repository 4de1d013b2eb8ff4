//! Geometric RSK in the (+, ×) semiring.
//!
//! The forward map is available through three independent routes: local
//! moves (linear or log domain), geometric row insertion, and ratios of
//! non-intersecting path partition functions τ. On top of it sit the
//! energy and type identities, a finite-difference Jacobian, the
//! tropical limit back to RSK, and the polymer identities.

pub mod insertion;
pub mod moves;
pub mod polymer;
pub mod tau;

use combinat_core::{CombinatError, GtPattern, WeightMatrix};
use rsk_engine::local::{forward_sweep, inverse_sweep};
use rsk_engine::{glue, unglue, Backend as CombBackend};
use thiserror::Error;

pub use insertion::{geom_row_insert, toda_residual};
pub use moves::{GeomRule, LogGeomRule};
pub use polymer::{
    flat_partition_brute_force, grsk_polygonal, log_polymer_partition, outer_corners, polymer_partition,
    staircase, strict_weak_partition,
};

/// Matrices with more cells than this are processed in the log domain.
pub const LOG_DOMAIN_CELLS: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum GrskError {
    #[error("word windows differ")]
    WindowMismatch,
    #[error("value overflowed the linear domain; use the log-domain entry points")]
    Overflow,
    #[error("not in the image of geometric RSK: {0}")]
    InvalidImage(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    LocalMoves,
    TauRatios,
    Insertion,
}

/// Geometric patterns Z (depth N) and Z′ (depth n) and the glued n x N
/// array.
#[derive(Debug, Clone, PartialEq)]
pub struct GrskOutput {
    pub z: GtPattern<f64>,
    pub zprime: GtPattern<f64>,
    pub glued: WeightMatrix<f64>,
}

impl GrskOutput {
    fn from_glued(glued: WeightMatrix<f64>) -> Self {
        let (z, zprime) = unglue(&glued);
        Self { z, zprime, glued }
    }

    fn from_patterns(z: GtPattern<f64>, zprime: GtPattern<f64>) -> Self {
        let glued = glue(&z, &zprime);
        Self { z, zprime, glued }
    }
}

pub fn grsk_forward(w: &WeightMatrix<f64>, backend: Backend) -> Result<GrskOutput, GrskError> {
    w.check()?;
    let out = match backend {
        Backend::LocalMoves => {
            if w.rows() * w.cols() > LOG_DOMAIN_CELLS {
                let logs = grsk_log(&w.map(|x| x.ln()));
                GrskOutput::from_glued(logs.map(|x| x.exp()))
            } else {
                let mut t = w.to_rows();
                forward_sweep(&GeomRule, &mut t);
                GrskOutput::from_glued(WeightMatrix::from_rows(&t)?)
            }
        }
        Backend::TauRatios => tau::grsk_by_tau(w),
        Backend::Insertion => insertion::grsk_by_insertion(w),
    };
    if !out.glued.data().iter().all(|x| x.is_finite() && *x > 0.0) {
        return Err(GrskError::Overflow);
    }
    Ok(out)
}

/// Log-domain forward map: log-weights in, glued log-output out.
pub fn grsk_log(logw: &WeightMatrix<f64>) -> WeightMatrix<f64> {
    let mut t = logw.to_rows();
    forward_sweep(&LogGeomRule, &mut t);
    WeightMatrix::from_rows(&t).expect("rectangular")
}

/// Log-domain inverse map.
pub fn grsk_log_inverse(logt: &WeightMatrix<f64>) -> WeightMatrix<f64> {
    let mut t = logt.to_rows();
    inverse_sweep(&LogGeomRule, &mut t);
    WeightMatrix::from_rows(&t).expect("rectangular")
}

/// Inverts geometric RSK by running the local moves backwards.
pub fn grsk_inverse(out: &GrskOutput) -> Result<WeightMatrix<f64>, GrskError> {
    if !out.z.is_positive() || !out.zprime.is_positive() {
        return Err(GrskError::InvalidImage("non-positive pattern entry".into()));
    }
    if out.z.bottom() != out.zprime.bottom() {
        return Err(GrskError::InvalidImage("shapes of Z and Z' differ".into()));
    }
    let glued = glue(&out.z, &out.zprime);
    let w = if glued.rows() * glued.cols() > LOG_DOMAIN_CELLS {
        grsk_log_inverse(&glued.map(|x| x.ln())).map(|x| x.exp())
    } else {
        let mut t = glued.to_rows();
        inverse_sweep(&GeomRule, &mut t);
        WeightMatrix::from_rows(&t)?
    };
    w.check().map_err(|e| GrskError::InvalidImage(e.to_string()))?;
    Ok(w)
}

/// E(Z) = Σ_{i<depth} Σ_j (z^i_j / z^{i+1}_j + z^{i+1}_{j+1} / z^i_j), terms
/// with missing entries omitted.
pub fn gt_energy(z: &GtPattern<f64>) -> f64 {
    let mut e = 0.0;
    for i in 1..z.depth() {
        for j in 1..=z.row_len(i) {
            let zij = *z.get(i, j);
            e += zij / z.get(i + 1, j);
            if let Some(lower) = z.try_get(i + 1, j + 1) {
                e += lower / zij;
            }
        }
    }
    e
}

/// Both sides of Σ 1/w = 1/z^n_n + E(Z) + E(Z′) for a square input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyReport {
    pub energy_z: f64,
    pub energy_zprime: f64,
    pub inv_corner: f64,
    pub lhs: f64,
    /// |lhs − rhs| / lhs.
    pub residual: f64,
}

pub fn energy_report(w: &WeightMatrix<f64>, out: &GrskOutput) -> Result<EnergyReport, GrskError> {
    let n = w.rows();
    if w.cols() != n {
        return Err(GrskError::Unsupported("energy identity is stated for square matrices".into()));
    }
    let lhs: f64 = w.data().iter().map(|x| 1.0 / x).sum();
    let energy_z = gt_energy(&out.z);
    let energy_zprime = gt_energy(&out.zprime);
    let inv_corner = 1.0 / out.z.get(n, n);
    let rhs = inv_corner + energy_z + energy_zprime;
    Ok(EnergyReport { energy_z, energy_zprime, inv_corner, lhs, residual: (lhs - rhs).abs() / lhs })
}

/// log |det ∂(log t)/∂(log w)| by central differences with step `h` in
/// log coordinates.
pub fn jacobian_logdet_with_step(w: &WeightMatrix<f64>, h: f64) -> Result<f64, GrskError> {
    w.check()?;
    if !(h > 1e-12) {
        return Err(GrskError::Unsupported(format!("step {h} underflows")));
    }
    let logw = w.map(|x| x.ln());
    let m = logw.data().len();
    let mut jac = nalgebra::DMatrix::<f64>::zeros(m, m);
    for k in 0..m {
        let mut plus = logw.data().to_vec();
        let mut minus = plus.clone();
        plus[k] += h;
        minus[k] -= h;
        let fp = grsk_log(&WeightMatrix::from_vec(w.rows(), w.cols(), plus)?);
        let fm = grsk_log(&WeightMatrix::from_vec(w.rows(), w.cols(), minus)?);
        for r in 0..m {
            jac[(r, k)] = (fp.data()[r] - fm.data()[r]) / (2.0 * h);
        }
    }
    Ok(jac.determinant().abs().ln())
}

pub fn jacobian_logdet(w: &WeightMatrix<f64>) -> Result<f64, GrskError> {
    jacobian_logdet_with_step(w, 1e-5)
}

/// ε·log of geometric RSK applied to exp(W/ε), in the log domain, as the
/// glued array. Converges entrywise to the RSK glued array as ε → 0.
pub fn tropicalize(w: &WeightMatrix<i64>, eps: f64) -> WeightMatrix<f64> {
    assert!(eps > 0.0, "eps must be positive");
    grsk_log(&w.map(|&x| x as f64 / eps)).map(|x| eps * x)
}

/// max_{i,j} |tropicalize(W, ε) − RSK(W)| on the glued arrays.
pub fn tropical_error(w: &WeightMatrix<i64>, eps: f64) -> f64 {
    let exact = rsk_engine::rsk_forward(w, CombBackend::LocalMoves).expect("integer matrix").glued;
    let approx = tropicalize(w, eps);
    exact.data().iter().zip(approx.data()).map(|(&a, &b)| (a as f64 - b).abs()).fold(0.0, f64::max)
}
