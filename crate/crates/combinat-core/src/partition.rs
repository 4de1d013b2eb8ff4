//! Integer partitions and Young diagrams.

use crate::error::CombinatError;
use std::fmt;

/// A weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self, CombinatError> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::NotAPartition(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Non-zero parts.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Length ℓ(λ): number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// λ_i with 1-based index; zero past the length.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 {
            panic!("partition parts are 1-indexed");
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`. Panics if ℓ(λ) > n.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        assert!(self.len() <= n, "partition {:?} longer than {}", self.parts, n);
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Conjugate partition λ'.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as i64)
            .collect();
        Partition { parts }
    }

    /// μ ⊆ λ.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// λ/μ is a horizontal strip: μ ⊆ λ and λ_{i+1} ≤ μ_i for all i.
    pub fn is_horizontal_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (1..=self.len()).all(|i| self.part(i + 1) <= mu.part(i))
    }

    /// λ/μ is a vertical strip: λ'/μ' is a horizontal strip.
    pub fn is_vertical_strip_over(&self, mu: &Partition) -> bool {
        self.contains(mu) && (1..=self.len().max(1)).all(|i| self.part(i) - mu.part(i) <= 1)
    }

    /// All partitions of `n` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all_of_size(n: i64, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, max_len, &mut cur, &mut out);
        out
    }

    /// All partitions with |λ| ≤ `max_size` and ℓ(λ) ≤ `max_len`, by size.
    pub fn all_up_to(max_size: i64, max_len: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|n| Self::all_of_size(n, max_len)).collect()
    }

    /// All partitions with ℓ(λ) ≤ `max_len` and λ₁ ≤ `max_part`.
    pub fn all_in_box(max_len: usize, max_part: i64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        boxed(max_len, max_part, &mut cur, &mut out);
        out
    }
}

fn fill(rest: i64, cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

fn boxed(slots: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    if slots == 0 {
        return;
    }
    for p in 1..=cap {
        cur.push(p);
        boxed(slots - 1, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = CombinatError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}
