use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CorrespondenceError;
use crate::tableaux::Weight;

/// A dense `m × n` matrix of non-negative integers. Margins are always
/// recomputed from the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from row arrays; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, CorrespondenceError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(row) = rows.iter().position(|r| r.len() != cols) {
            return Err(CorrespondenceError::Ragged { row: row + 1 });
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut usize {
        &mut self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries
            .chunks(self.cols)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// `μ_i = Σ_j a_ij`.
    pub fn row_sums(&self) -> Weight {
        Weight(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self.get(i, j)).sum())
                .collect(),
        )
    }

    /// `ν_j = Σ_i a_ij`.
    pub fn col_sums(&self) -> Weight {
        Weight(
            (0..self.cols)
                .map(|j| (0..self.rows).map(|i| self.get(i, j)).sum())
                .collect(),
        )
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j);
            }
        }
        t
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|&a| a <= 1)
    }

    pub fn trace(&self) -> usize {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Number of odd diagonal entries.
    pub fn odd_diagonal_count(&self) -> usize {
        (0..self.rows.min(self.cols))
            .filter(|&i| self.get(i, i) % 2 == 1)
            .count()
    }

    /// Degree vector of a symmetric matrix read as a multigraph in which a
    /// diagonal entry is a loop counted twice: `μ_i = Σ_j a_ij + a_ii`.
    pub fn graph_degrees(&self) -> Weight {
        let mut w = self.row_sums();
        for i in 0..self.rows.min(self.cols) {
            w.0[i] += self.get(i, i);
        }
        w
    }

    /// Extends with zero rows and columns to at least `rows × cols`.
    pub fn padded(&self, rows: usize, cols: usize) -> IntMatrix {
        let rows = rows.max(self.rows);
        let cols = cols.max(self.cols);
        let mut out = IntMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(i, j) = self.get(i, j);
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<usize>>> for IntMatrix {
    type Error = CorrespondenceError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<usize>> {
    fn from(a: IntMatrix) -> Self {
        a.to_rows()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string(&self.to_rows()).map_err(|_| fmt::Error)?
        )
    }
}

/// Sort convention for the two-line array of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BiwordOrder {
    /// Top letters weakly increasing; bottom letters weakly increasing
    /// within equal top letters.
    Rsk,
    /// Top letters weakly increasing; bottom letters weakly decreasing
    /// within equal top letters.
    Burge,
}

/// Two-line array: `(top, bottom)` pairs, 1-based letters, pair `(i, j)`
/// repeated `a_ij` times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biword {
    pub pairs: Vec<(usize, usize)>,
}

impl Biword {
    pub fn from_matrix(a: &IntMatrix, order: BiwordOrder) -> Biword {
        let mut pairs = Vec::with_capacity(a.total());
        for i in 0..a.nrows() {
            let mut row: Vec<(usize, usize)> = Vec::new();
            for j in 0..a.ncols() {
                row.extend(std::iter::repeat_n((i + 1, j + 1), a.get(i, j)));
            }
            if order == BiwordOrder::Burge {
                row.reverse();
            }
            pairs.extend(row);
        }
        Biword { pairs }
    }

    /// The matrix counting each pair, sized by the largest letters seen.
    pub fn to_matrix(&self) -> IntMatrix {
        let rows = self.pairs.iter().map(|p| p.0).max().unwrap_or(0);
        let cols = self.pairs.iter().map(|p| p.1).max().unwrap_or(0);
        let mut a = IntMatrix::zeros(rows, cols);
        for &(u, v) in &self.pairs {
            *a.get_mut(u - 1, v - 1) += 1;
        }
        a
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub fn matrix_to_biword(a: &IntMatrix, order: BiwordOrder) -> Biword {
    Biword::from_matrix(a, order)
}

pub fn biword_to_matrix(b: &Biword) -> IntMatrix {
    b.to_matrix()
}

/// Matrix classes with prescribed margins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixClass {
    /// `M_μν`: non-negative integer matrices.
    M,
    /// `N_μν`: 0/1 matrices.
    N,
    /// `M^sym_νν`: symmetric non-negative integer matrices.
    Msym,
    /// `N^sym_μμ`: symmetric 0/1 matrices.
    Nsym,
    /// `N^{sym,tr=0}_μμ`: symmetric 0/1 matrices with zero diagonal.
    NsymTr0,
}

impl MatrixClass {
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            MatrixClass::Msym | MatrixClass::Nsym | MatrixClass::NsymTr0
        )
    }

    pub fn contains(self, a: &IntMatrix) -> bool {
        match self {
            MatrixClass::M => true,
            MatrixClass::N => a.is_zero_one(),
            MatrixClass::Msym => a.is_symmetric(),
            MatrixClass::Nsym => a.is_symmetric() && a.is_zero_one(),
            MatrixClass::NsymTr0 => a.is_symmetric() && a.is_zero_one() && a.trace() == 0,
        }
    }
}

impl FromStr for MatrixClass {
    type Err = CorrespondenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "M" => Ok(MatrixClass::M),
            "N" => Ok(MatrixClass::N),
            "Msym" => Ok(MatrixClass::Msym),
            "Nsym" => Ok(MatrixClass::Nsym),
            "NsymTr0" => Ok(MatrixClass::NsymTr0),
            other => Err(CorrespondenceError::UnknownClass(other.to_string())),
        }
    }
}

/// Every matrix of `class` with row sums `mu` and column sums `nu`, each
/// exactly once, in a fixed order.
pub fn enumerate_matrices(
    class: MatrixClass,
    mu: &Weight,
    nu: &Weight,
) -> Result<Vec<IntMatrix>, CorrespondenceError> {
    if mu.total() != nu.total() || (class.is_symmetric() && mu != nu) {
        return Err(CorrespondenceError::MarginMismatch {
            mu: mu.clone(),
            nu: nu.clone(),
        });
    }
    let out = match class {
        MatrixClass::M => rectangular(mu, nu, usize::MAX),
        MatrixClass::N => rectangular(mu, nu, 1),
        MatrixClass::Msym => symmetric(mu, usize::MAX, true, 1),
        MatrixClass::Nsym => symmetric(mu, 1, true, 1),
        MatrixClass::NsymTr0 => symmetric(mu, 1, false, 1),
    };
    Ok(out)
}

/// Symmetric 0/1 matrices whose [`IntMatrix::graph_degrees`] equal `mu`:
/// simple graphs on `mu.len()` vertices with degree sequence `mu`, with
/// loops (counted twice) when `allow_loops` is set.
pub fn enumerate_by_degree(mu: &Weight, allow_loops: bool) -> Vec<IntMatrix> {
    symmetric(mu, 1, allow_loops, 2)
}

fn rectangular(mu: &Weight, nu: &Weight, cap: usize) -> Vec<IntMatrix> {
    let (m, n) = (mu.len(), nu.len());
    let mut out = Vec::new();
    let mut a = IntMatrix::zeros(m, n);
    let mut row_left = mu.0.clone();
    let mut col_left = nu.0.clone();

    #[allow(clippy::too_many_arguments)]
    fn go(
        cell: usize,
        m: usize,
        n: usize,
        cap: usize,
        a: &mut IntMatrix,
        row_left: &mut [usize],
        col_left: &mut [usize],
        out: &mut Vec<IntMatrix>,
    ) {
        if cell == m * n {
            if row_left.iter().chain(col_left.iter()).all(|&x| x == 0) {
                out.push(a.clone());
            }
            return;
        }
        let (i, j) = (cell / n, cell % n);
        let hi = row_left[i].min(col_left[j]).min(cap);
        // the last cell of a row must absorb what is left of the row sum
        let lo = if j + 1 == n { row_left[i] } else { 0 };
        if lo > hi {
            return;
        }
        for v in (lo..=hi).rev() {
            *a.get_mut(i, j) = v;
            row_left[i] -= v;
            col_left[j] -= v;
            go(cell + 1, m, n, cap, a, row_left, col_left, out);
            row_left[i] += v;
            col_left[j] += v;
        }
        *a.get_mut(i, j) = 0;
    }

    if m == 0 || n == 0 {
        if mu.total() == 0 {
            out.push(a);
        }
        return out;
    }
    go(0, m, n, cap, &mut a, &mut row_left, &mut col_left, &mut out);
    out
}

/// Symmetric matrices over the upper triangle. A diagonal entry `v`
/// consumes `diag_weight * v` of its row's budget.
fn symmetric(mu: &Weight, cap: usize, allow_diagonal: bool, diag_weight: usize) -> Vec<IntMatrix> {
    let n = mu.len();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut a = IntMatrix::zeros(n, n);
    let mut left = mu.0.clone();

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        n: usize,
        cap: usize,
        allow_diagonal: bool,
        diag_weight: usize,
    }

    fn go(
        idx: usize,
        ctx: &Ctx<'_>,
        a: &mut IntMatrix,
        left: &mut [usize],
        out: &mut Vec<IntMatrix>,
    ) {
        let Some(&(i, j)) = ctx.cells.get(idx) else {
            if left.iter().all(|&x| x == 0) {
                out.push(a.clone());
            }
            return;
        };
        let hi = if i == j {
            if ctx.allow_diagonal {
                (left[i] / ctx.diag_weight).min(ctx.cap)
            } else {
                0
            }
        } else {
            left[i].min(left[j]).min(ctx.cap)
        };
        for v in (0..=hi).rev() {
            if i == j {
                left[i] -= ctx.diag_weight * v;
            } else {
                left[i] -= v;
                left[j] -= v;
            }
            // row i is complete after its last cell
            if j + 1 < ctx.n || left[i] == 0 {
                *a.get_mut(i, j) = v;
                *a.get_mut(j, i) = v;
                go(idx + 1, ctx, a, left, out);
            }
            if i == j {
                left[i] += ctx.diag_weight * v;
            } else {
                left[i] += v;
                left[j] += v;
            }
        }
        *a.get_mut(i, j) = 0;
        *a.get_mut(j, i) = 0;
    }

    let ctx = Ctx {
        cells: &cells,
        n,
        cap,
        allow_diagonal,
        diag_weight,
    };
    go(0, &ctx, &mut a, &mut left, &mut out);
    out
}
