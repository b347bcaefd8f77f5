//! Semistandard Young tableaux over the alphabet `1..=n`.
//!
//! Rows weakly increase left to right, columns strictly increase top to
//! bottom. Cells are addressed 1-based as `(row, col)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::Partition;

mod insert;

pub use insert::{
    col_insert, dual_row_insert, reverse_col_insert, reverse_dual_row_insert, reverse_row_insert,
    row_insert, RowStrictArray,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row {row} is longer than the row above it")]
    NonPartitionShape { row: usize },
    #[error("row decreases at {cell}")]
    RowDecreasing { cell: Cell },
    #[error("column not strictly increasing at {cell}")]
    ColumnNotStrict { cell: Cell },
    #[error("entry {value} at {cell} is outside 1..={n}")]
    EntryOutOfRange { cell: Cell, value: usize, n: usize },
    #[error("{cell} is not an outer corner")]
    NotACorner { cell: Cell },
    #[error("shape has size {shape}, weight sums to {weight}")]
    SizeMismatch { shape: usize, weight: usize },
}

/// A 1-based cell position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, col {})", self.row, self.col)
    }
}

/// Letter multiplicities `(μ_1,…,μ_n)` over a fixed alphabet size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn zeros(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        Weight(vec![1; n])
    }

    /// Alphabet size.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    /// Dominant rearrangement.
    pub fn sorted(&self) -> Partition {
        Partition::from_weight(&self.0)
    }

    /// All weights of length `n` summing to `d` (weak compositions), in
    /// descending lexicographic order.
    pub fn all(d: usize, n: usize) -> Vec<Weight> {
        fn go(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Weight>) {
            if slots == 1 {
                prefix.push(remaining);
                out.push(Weight(prefix.clone()));
                prefix.pop();
                return;
            }
            for v in (0..=remaining).rev() {
                prefix.push(v);
                go(remaining - v, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        if n == 0 {
            return if d == 0 {
                vec![Weight(Vec::new())]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        go(d, n, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Vec<usize>> for Weight {
    fn from(v: Vec<usize>) -> Self {
        Weight(v)
    }
}

/// A semistandard Young tableau. Construct through [`validate`] or the
/// insertion algorithms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(
            check_ssyt(&rows, usize::MAX).is_ok(),
            "not an SSYT: {rows:?}"
        );
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn max_entry(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.last().copied()).max()
    }

    /// `wt(t)` over the alphabet `1..=n`. Letters above `n` are ignored.
    pub fn weight(&self, n: usize) -> Weight {
        let mut w = vec![0; n];
        for &x in self.rows.iter().flatten() {
            if (1..=n).contains(&x) {
                w[x - 1] += 1;
            }
        }
        Weight(w)
    }

    /// Outer corners: cells whose removal leaves a partition shape.
    pub fn corners(&self) -> Vec<Cell> {
        corners_of(&self.rows)
    }

    pub fn transpose_rows(&self) -> Vec<Vec<usize>> {
        transpose(&self.rows)
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = TableauError;

    /// Validates over the alphabet `1..=max entry`.
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        let n = rows.iter().flatten().copied().max().unwrap_or(0);
        validate(rows, n)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn corners_of(rows: &[Vec<usize>]) -> Vec<Cell> {
    (0..rows.len())
        .filter(|&r| r + 1 == rows.len() || rows[r + 1].len() < rows[r].len())
        .map(|r| Cell::new(r + 1, rows[r].len()))
        .collect()
}

pub(crate) fn transpose(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| {
            rows.iter()
                .take_while(|r| r.len() > c)
                .map(|r| r[c])
                .collect()
        })
        .collect()
}

fn check_ssyt(rows: &[Vec<usize>], n: usize) -> Result<(), TableauError> {
    for r in 1..rows.len() {
        if rows[r].len() > rows[r - 1].len() {
            return Err(TableauError::NonPartitionShape { row: r + 1 });
        }
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, &value) in row.iter().enumerate() {
            let cell = Cell::new(r + 1, c + 1);
            if value == 0 || value > n {
                return Err(TableauError::EntryOutOfRange { cell, value, n });
            }
            if c > 0 && row[c - 1] > value {
                return Err(TableauError::RowDecreasing { cell });
            }
            if r > 0 && rows[r - 1][c] >= value {
                return Err(TableauError::ColumnNotStrict { cell });
            }
        }
    }
    Ok(())
}

/// Checks a raw row array against the SSYT axioms over `1..=n`, reporting
/// the first violation in row-major order. Empty rows are not allowed
/// except as trailing padding, which is stripped.
pub fn validate(rows: Vec<Vec<usize>>, n: usize) -> Result<Tableau, TableauError> {
    let mut rows = rows;
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    check_ssyt(&rows, n)?;
    Ok(Tableau { rows })
}

/// Walks `Tab_n(λ)` (or `Tab(λ,μ)` when `weight` is given) by filling cells
/// column by column, top to bottom, calling `visit` on each completed
/// filling.
fn backtrack(
    lambda: &Partition,
    n: usize,
    weight: Option<&[usize]>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if lambda.len() > n {
        return;
    }
    if let Some(w) = weight {
        if w.len() != n || w.iter().sum::<usize>() != lambda.size() {
            return;
        }
    }
    let conj = lambda.conjugate();
    let cells: Vec<(usize, usize)> = (0..conj.len())
        .flat_map(|c| (0..conj.part(c)).map(move |r| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    let mut remaining: Vec<usize> = weight.map_or_else(Vec::new, <[usize]>::to_vec);

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        col_len: &'a Partition,
        n: usize,
        weighted: bool,
    }

    fn go(
        idx: usize,
        ctx: &Ctx<'_>,
        rows: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some(&(r, c)) = ctx.cells.get(idx) else {
            visit(rows);
            return;
        };
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = left.max(above);
        // room for the strictly larger entries still to come below in this column
        let below = ctx.col_len.part(c) - r - 1;
        let Some(hi) = ctx.n.checked_sub(below) else {
            return;
        };
        for v in lo..=hi {
            if ctx.weighted {
                if remaining[v - 1] == 0 {
                    continue;
                }
                remaining[v - 1] -= 1;
            }
            rows[r][c] = v;
            go(idx + 1, ctx, rows, remaining, visit);
            if ctx.weighted {
                remaining[v - 1] += 1;
            }
        }
    }

    let ctx = Ctx {
        cells: &cells,
        col_len: &conj,
        n,
        weighted: weight.is_some(),
    };
    go(0, &ctx, &mut rows, &mut remaining, visit);
}

/// `Tab_n(λ)`: every SSYT of shape `λ` with entries in `1..=n`.
pub fn enumerate_tableaux(lambda: &Partition, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    backtrack(lambda, n, None, &mut |rows| {
        out.push(Tableau::from_rows_unchecked(rows.to_vec()))
    });
    out
}

/// `Tab(λ,μ)`: every SSYT of shape `λ` and weight `μ`.
pub fn enumerate_tableaux_weight(lambda: &Partition, mu: &Weight) -> Vec<Tableau> {
    let mut out = Vec::new();
    backtrack(lambda, mu.len(), Some(mu.coords()), &mut |rows| {
        out.push(Tableau::from_rows_unchecked(rows.to_vec()))
    });
    out
}

/// The Kostka number `K_{λμ} = |Tab(λ,μ)|`, counted by the same
/// backtracking walk as [`enumerate_tableaux_weight`].
pub fn kostka(lambda: &Partition, mu: &Weight) -> Result<u64, TableauError> {
    if lambda.size() != mu.total() {
        return Err(TableauError::SizeMismatch {
            shape: lambda.size(),
            weight: mu.total(),
        });
    }
    let mut count = 0u64;
    backtrack(lambda, mu.len(), Some(mu.coords()), &mut |_| count += 1);
    Ok(count)
}

/// `f^λ`, the number of standard tableaux of shape `λ`.
pub fn standard_count(lambda: &Partition) -> u64 {
    kostka(lambda, &Weight::ones(lambda.size())).expect("sizes agree by construction")
}
