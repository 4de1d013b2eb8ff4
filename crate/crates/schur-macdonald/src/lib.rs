//! Schur polynomials, Macdonald P/Q polynomials and their identities.
//!
//! Every routine is generic over the scalar type: `BigRational` for exact
//! identity checks and `f64` for convergence checks of infinite sums.

pub mod cauchy;
pub mod coeffs;
pub mod macdonald;
pub mod pieri;
pub mod qpoch;
pub mod schur;

use thiserror::Error;

pub use cauchy::{cauchy_residual, skew_cauchy_sides, Family};
pub use coeffs::{skew_coeffs, Coefficients, ExactCoeffs, FloatCoeffs, SkewCoeffs};
pub use macdonald::{macdonald, Which};
pub use pieri::{pieri_apply, pieri_residual, PieriRule};
pub use qpoch::{qpochhammer, qpochhammer_finite, qpochhammer_inf};
pub use schur::{schur, schur_bialternant, schur_branching, schur_gt_sum, Method};

#[derive(Debug, Error, PartialEq)]
pub enum SymError {
    #[error("|q| must be < 1 for infinite products, got {0}")]
    QOutOfRange(f64),
    #[error("bialternant needs pairwise distinct variables")]
    RepeatedVariables,
    #[error("partition has {len} parts but only {vars} variables")]
    TooLong { len: usize, vars: usize },
    #[error("exact coefficients need t = 0 or q = t")]
    NotExact,
    #[error("sum diverges: |x_i y_j| must be < 1")]
    Divergent,
}
