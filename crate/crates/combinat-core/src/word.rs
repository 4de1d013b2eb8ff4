//! Words over the alphabet {1, …, N} stored as letter multiplicities.

use crate::error::CombinatError;
use crate::matrix::Weight;

/// Multiplicities (x_i, …, x_N) of the letters i..=N.
///
/// A row of a semistandard tableau in row r is a word starting at letter r.
/// In geometric mode the "multiplicities" are positive reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Word<T> {
    start: usize,
    mult: Vec<T>,
}

impl<T: Weight> Word<T> {
    pub fn new(start: usize, mult: Vec<T>) -> Result<Self, CombinatError> {
        assert!(start >= 1, "letters are 1-based");
        if let Some(k) = mult.iter().position(|x| !x.admissible()) {
            return Err(CombinatError::InadmissibleWord { letter: start + k });
        }
        Ok(Self { start, mult })
    }
}

impl<T: Copy> Word<T> {
    /// Builds a word without checking admissibility.
    pub fn from_raw(start: usize, mult: Vec<T>) -> Self {
        Self { start, mult }
    }

    /// The empty word positioned just past letter `last`.
    pub fn empty(last: usize) -> Self {
        Self { start: last + 1, mult: Vec::new() }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Largest letter of the window, or start − 1 for an empty word.
    pub fn end(&self) -> usize {
        self.start + self.mult.len() - 1
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicities(&self) -> &[T] {
        &self.mult
    }

    /// Multiplicity of `letter`.
    pub fn get(&self, letter: usize) -> T {
        self.mult[letter - self.start]
    }
}

impl Word<i64> {
    /// Builds an integer word from its letters, e.g. "156" over {1..7}.
    pub fn from_letters(start: usize, end: usize, letters: &[usize]) -> Self {
        let mut mult = vec![0; end + 1 - start];
        for &l in letters {
            mult[l - start] += 1;
        }
        Self { start, mult }
    }

    /// Letters in increasing order.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (k, &m) in self.mult.iter().enumerate() {
            out.extend(std::iter::repeat_n(self.start + k, m as usize));
        }
        out
    }

    /// Number of letters.
    pub fn total(&self) -> i64 {
        self.mult.iter().sum()
    }
}
