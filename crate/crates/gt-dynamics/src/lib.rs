//! Continuous-time dynamics on Gelfand–Tsetlin patterns: Poissonian RSK,
//! the q-deformed RSK of O'Connell–Pei and the q-Whittaker 2d growth model,
//! with exact intertwining checks on truncated state spaces and a Monte
//! Carlo version of the Pitman–Rogers criterion.
//!
//! Patterns are `GtPattern<i64>` with z^i_1 ≥ z^i_2 ≥ … and interlacing
//! z^{i+1}_{j+1} ≤ z^i_j ≤ z^{i+1}_j; indices are 1-based.

pub mod burke;
pub mod doob;
pub mod kernels;
pub mod pitman_rogers;
pub mod rates;
pub mod simulate;

pub use burke::{burke_check, burke_transform, BurkeLaw, BurkeReport};
pub use doob::{doob_rates, schur_doob_kernel};
pub use kernels::{
    intertwining_residual, macdonald_intertwining_float, macdonald_kernel, schur_generator, IntertwiningReport,
    KernelModel, TruncatedKernel,
};
pub use pitman_rogers::{pitman_rogers_distance, Checkpoint, InitialLaw};
pub use rates::{
    poisson_rsk_jump, poisson_rsk_rates, qrsk_push_probability, qrsk_step, qwhittaker_jump, qwhittaker_rate,
    qwhittaker_rates, Rate,
};
pub use simulate::{simulate, DynamicsConfig, Event, Model, Trajectory};

#[derive(Debug, PartialEq, thiserror::Error)]
pub enum DynamicsError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("pattern violates interlacing at z^{level}_{index}")]
    Interlacing { level: usize, index: usize },
    #[error("more than {0} events before the horizon")]
    EventCap(usize),
    #[error("{0:?} is outside the Weyl chamber")]
    Chamber(Vec<i64>),
    #[error("truncation M = {0} leaves no interior rows")]
    Truncation(i64),
    #[error("at least 1000 replicas are needed, got {0}")]
    TooFewReplicas(usize),
    #[error(transparent)]
    Sym(#[from] schur_macdonald::SymError),
}

pub type Result<T> = std::result::Result<T, DynamicsError>;

pub(crate) fn check_pattern(z: &combinat_core::GtPattern<i64>) -> Result<()> {
    match z.validate() {
        combinat_core::GtValidity::Valid => Ok(()),
        combinat_core::GtValidity::Violation { level, index } => Err(DynamicsError::Interlacing { level, index }),
    }
}
