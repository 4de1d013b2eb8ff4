//! GL(n) Whittaker functions through Givental's integral, the Bump–Stade
//! identity, the Sklyanin measure and the Laplace transform of the
//! log-gamma polymer partition function.

pub mod bump_stade;
pub mod gamma;
pub mod givental;
pub mod laplace;
pub mod sklyanin;

pub use bump_stade::{bump_stade, bump_stade_residual, BumpStadeReport};
pub use gamma::{gamma, ln_gamma, rgamma};
pub use givental::{givental_weight, whittaker_gln, GiventalQuad, WhittakerQuery, WhittakerValue};
pub use laplace::{loggamma_laplace, loggamma_laplace_1d, ContourSpec, LaplaceEstimate, LaplaceMethod};
pub use sklyanin::{sklyanin, sklyanin_imag};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WhittakerError {
    #[error("rank {0} is not supported here")]
    Rank(usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("quadrature did not settle: relative change {delta:.3e} on refinement")]
    NonConvergence { delta: f64 },
    #[error("coincident spectral points: Γ has a pole")]
    Pole,
    #[error("contour does not separate the poles: {0}")]
    Contour(String),
    #[error("at least 100 replicas are needed, got {0}")]
    TooFewReplicas(usize),
}

pub type Result<T> = std::result::Result<T, WhittakerError>;
