//! Robinson-Schensted-Knuth correspondence on non-negative integer matrices.
//!
//! Two independent backends compute the pair of Gelfand-Tsetlin patterns
//! (Z, Z′): repeated (max, +) row insertion of the matrix rows as words,
//! and the sweep of local 2x2 moves. The inverse map runs the local moves
//! backwards.

pub mod glue;
pub mod insertion;
pub mod local;

use combinat_core::{CombinatError, GtPattern, WeightMatrix};
use thiserror::Error;

pub use glue::{glue, unglue};
pub use insertion::row_insert_word;
pub use local::{local_move, CellClass, LocalCells, LocalRule, MaxPlusRule};

#[derive(Debug, Error, PartialEq)]
pub enum RskError {
    #[error("word windows differ: x starts at {x_start} with {x_len} letters, a at {a_start} with {a_len}")]
    WindowMismatch { x_start: usize, x_len: usize, a_start: usize, a_len: usize },
    #[error("not in the image of RSK: {0}")]
    InvalidImage(String),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

/// Which algorithm computes the correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Insertion,
    LocalMoves,
}

/// P-pattern Z (depth N, the number of letters), Q-pattern Z′ (depth n, the
/// number of words) and the glued n x N array.
#[derive(Debug, Clone, PartialEq)]
pub struct RskOutput {
    pub z: GtPattern<i64>,
    pub zprime: GtPattern<i64>,
    pub glued: WeightMatrix<i64>,
}

impl RskOutput {
    /// Common bottom row sh(Z) = sh(Z′).
    pub fn shape(&self) -> &[i64] {
        self.z.bottom()
    }
}

pub fn rsk_forward(w: &WeightMatrix<i64>, backend: Backend) -> Result<RskOutput, RskError> {
    w.check()?;
    match backend {
        Backend::Insertion => Ok(insertion::rsk_by_insertion(w)),
        Backend::LocalMoves => Ok(rsk_with_rule(w, &MaxPlusRule::default())),
    }
}

/// Local-move backend with an explicit rule; the rule's `corrupt` flag is a
/// mutation hook for negative-control testing.
pub fn rsk_with_rule(w: &WeightMatrix<i64>, rule: &MaxPlusRule) -> RskOutput {
    let mut t = w.to_rows();
    local::forward_sweep(rule, &mut t);
    let glued = WeightMatrix::from_rows(&t).expect("rectangular");
    let (z, zprime) = unglue(&glued);
    RskOutput { z, zprime, glued }
}

/// Inverts the correspondence by running the local moves backwards.
pub fn rsk_inverse(out: &RskOutput) -> Result<WeightMatrix<i64>, RskError> {
    let (n, big_n) = (out.glued.rows(), out.glued.cols());
    if out.z.depth() != big_n || out.zprime.depth() != n {
        return Err(RskError::InvalidImage(format!(
            "pattern depths ({}, {}) do not fit a {n}x{big_n} array",
            out.z.depth(),
            out.zprime.depth()
        )));
    }
    for (name, p) in [("Z", &out.z), ("Z'", &out.zprime)] {
        if let combinat_core::GtValidity::Violation { level, index } = p.validate() {
            return Err(RskError::InvalidImage(format!("{name} violates interlacing at z^{level}_{index}")));
        }
    }
    if out.z.bottom() != out.zprime.bottom() {
        return Err(RskError::InvalidImage("shapes of Z and Z' differ".into()));
    }
    if glue(&out.z, &out.zprime) != out.glued {
        return Err(RskError::InvalidImage("glued array disagrees with the patterns".into()));
    }
    let mut t = out.glued.to_rows();
    local::inverse_sweep(&MaxPlusRule::default(), &mut t);
    let w = WeightMatrix::from_rows(&t)?;
    w.check().map_err(|e| RskError::InvalidImage(e.to_string()))?;
    Ok(w)
}
