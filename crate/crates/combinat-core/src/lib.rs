//! Foundational combinatorics for the KPZ toolkit.
//!
//! Partitions, words, weight matrices and Gelfand-Tsetlin patterns, together
//! with slow brute-force oracles (lattice path enumeration, longest increasing
//! subsequence, Lindström-Gessel-Viennot determinants) that the fast
//! algorithms in the other crates are tested against.

pub mod error;
pub mod gt;
pub mod lis;
pub mod matrix;
pub mod partition;
pub mod paths;
pub mod word;

pub use error::CombinatError;
pub use gt::{GtPattern, GtValidity};
pub use lis::lis;
pub use matrix::{Weight, WeightMatrix};
pub use partition::Partition;
pub use paths::{
    brute_force_paths, lgv_determinant, path_sum_matrix, MaxPlus, PathEnsembleQuery, Semiring,
    SumProduct,
};
pub use word::Word;
