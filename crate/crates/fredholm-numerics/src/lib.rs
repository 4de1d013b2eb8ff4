//! Fredholm determinants and the kernels of last passage percolation.
//!
//! Determinants are computed by Nyström discretisation: det(I + c W^{1/2} K
//! W^{1/2}) on quadrature nodes. A truncated series (traces of powers fed
//! through Newton's identities) is kept as a cross-check.

pub mod airy;
pub mod biorth;
pub mod det;
pub mod exp_lpp;
pub mod kernels;
pub mod lpp;
pub mod quad;
pub mod tw;

use thiserror::Error;

pub use airy::{airy, airy2_kernel, airy2_kernel_integral, airy_prime, airy_prime_series, airy_series};
pub use biorth::{biorthogonal_fredholm_check, cauchy_binet_sides};
pub use det::{fredholm_det, nystrom_matrix_det, DetMethod, DetResult, Domain};
pub use exp_lpp::{exp_lpp_cdf_equal, laguerre_kernel_matrix};
pub use kernels::{kexp_contour, kexp_residue, lpp_kernel_residue, LppContour};
pub use lpp::{lpp_cdf, lpp_cdf_exact, lpp_cdf_fredholm, lpp_cdf_mc, LppMethod, McEstimate};
pub use quad::{gauss_legendre, Quadrature};
pub use tw::{tw_gue_cdf, tw_gue_cdf_with, tw_series_oracle};

#[derive(Debug, Error, PartialEq)]
pub enum FredholmError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("contour violates its constraint: {0}")]
    Contour(String),
    #[error("matrix G is singular")]
    Singular,
}
