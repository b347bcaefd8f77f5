//! Integer partitions: conjugation, Frobenius coordinates, the threshold
//! predicate and enumeration.
//!
//! A [`Partition`] is stored as its positive parts in weakly decreasing
//! order. Padding with zeros to a fixed number of coordinates is a view
//! ([`Partition::padded`]), never a separate value, so equality is plain
//! equality of part lists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: part {index} ({part}) exceeds the previous part")]
    NotDecreasing { index: usize, part: usize },
    #[error("zero part at position {index} is followed by a positive part")]
    InteriorZero { index: usize },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// An integer partition, e.g. `(5,4,2)`.
///
/// The derived ordering is lexicographic on the part lists, which is the
/// order used for enumeration (descending) and for the Schur-expansion
/// pivot.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates a weakly decreasing list. Trailing zeros are accepted and
    /// dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[1] > w[0] {
                return Err(PartitionError::NotDecreasing {
                    index: index + 1,
                    part: w[1],
                });
            }
        }
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::InteriorZero { index });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The dominant rearrangement of a weight vector: sort descending and
    /// drop zeros.
    pub fn from_weight(coords: &[usize]) -> Self {
        let mut parts: Vec<usize> = coords.iter().copied().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok_and(|p| p.0 == parts));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to `n` coordinates, or `None` if there
    /// are more than `n` nonzero parts.
    pub fn padded(&self, n: usize) -> Option<Vec<usize>> {
        if self.0.len() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// `λ'_i = #{j | λ_j ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    /// Number of cells on the main diagonal.
    pub fn durfee_rank(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let rank = self.durfee_rank();
        let conj = self.conjugate();
        // 1-based i: alpha_i = λ_i - i, beta_i = λ'_i - i
        let alphas = (0..rank).map(|i| self.0[i] - (i + 1)).collect();
        let betas = (0..rank).map(|i| conj.0[i] - (i + 1)).collect();
        FrobeniusCoords { alphas, betas }
    }

    /// Frobenius coordinates satisfy `β_i = α_i + 1` along the whole
    /// diagonal. The empty partition qualifies vacuously.
    pub fn is_threshold(&self) -> bool {
        let f = self.frobenius();
        f.alphas.iter().zip(&f.betas).all(|(&a, &b)| b == a + 1)
    }

    pub fn odd_row_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn odd_column_count(&self) -> usize {
        self.conjugate().odd_row_count()
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 0)
    }

    /// Every distinct part occurs an even number of times.
    pub fn even_multiplicities(&self) -> bool {
        self.multiplicities().into_iter().all(|(_, m)| m % 2 == 0)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,1`, `(3,1)` or `[3,1]`; the empty string and `()` give the
/// empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Frobenius coordinates `(α_1,…,α_d | β_1,…,β_d)`: arm and leg lengths of
/// the diagonal cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub alphas: Vec<usize>,
    pub betas: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.alphas.len()
    }
}

/// All partitions of `d` (with at most `max_parts` parts when given), in
/// descending lexicographic order.
pub fn partitions_of(d: usize, max_parts: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        cap: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_parts.unwrap_or(d), &mut Vec::new(), &mut out);
    out
}

/// `TP(d)`: threshold partitions of `d`, filtered from [`partitions_of`].
pub fn threshold_partitions(d: usize) -> Vec<Partition> {
    partitions_of(d, None)
        .into_iter()
        .filter(Partition::is_threshold)
        .collect()
}
