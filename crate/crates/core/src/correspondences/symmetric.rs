//! Correspondences on symmetric matrices.
//!
//! [`rsk_symmetric`] and [`burge_symmetric`] use Knuth symmetry: a
//! symmetric matrix goes to a pair `(P, P)`, and `P` alone determines the
//! matrix.
//!
//! [`bur1`] and [`bur2`] read a symmetric 0/1 matrix as a graph and insert
//! it edge by edge. Each edge adds two cells: inserting the smaller vertex
//! creates a cell, and the larger vertex is placed in the cell mirrored
//! across the diagonal. For [`bur1`] (simple graphs, row insertion) the
//! mirror of arm cell `(r, c)`, `c >= r`, is `(c + 1, r)`, so shapes stay
//! threshold (`β_i = α_i + 1`). For [`bur2`] (loops allowed, column
//! insertion) the mirror of `(r, c)`, `c > r`, is `(c - 1, r)` and a diagonal
//! cell pairs with the cell to its right, so conjugate shapes stay
//! threshold. A loop at `i` contributes 2 to the weight of letter `i`.

use super::insertion::{burge, burge_inverse, place, rsk, rsk_inverse};
use super::matrix::{IntMatrix, MatrixClass};
use super::CorrespondenceError;
use crate::tableaux::{
    col_insert, reverse_col_insert, reverse_row_insert, row_insert, validate, Cell, Tableau,
    TableauError,
};

fn require_symmetric(a: &IntMatrix) -> Result<(), CorrespondenceError> {
    if a.is_symmetric() {
        Ok(())
    } else {
        Err(CorrespondenceError::NotSymmetric)
    }
}

fn diagonal_image(
    a: &IntMatrix,
    map: impl Fn(&IntMatrix) -> (Tableau, Tableau),
) -> Result<Tableau, CorrespondenceError> {
    require_symmetric(a)?;
    let (p, q) = map(a);
    if p != q {
        return Err(CorrespondenceError::SymmetryViolated);
    }
    Ok(p)
}

fn square(a: IntMatrix) -> IntMatrix {
    let n = a.nrows().max(a.ncols());
    a.padded(n, n)
}

/// The common tableau of `rsk(A) = (P, P)` for symmetric `A`.
pub fn rsk_symmetric(a: &IntMatrix) -> Result<Tableau, CorrespondenceError> {
    diagonal_image(a, rsk)
}

pub fn rsk_symmetric_inverse(p: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    rsk_inverse(p, p).map(square)
}

/// The common tableau of `burge(A) = (P, P)` for symmetric `A`.
pub fn burge_symmetric(a: &IntMatrix) -> Result<Tableau, CorrespondenceError> {
    diagonal_image(a, burge)
}

pub fn burge_symmetric_inverse(p: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    burge_inverse(p, p).map(square)
}

type Mirror = fn(Cell) -> Cell;
type Reverse = fn(&Tableau, Cell) -> Result<(Tableau, usize), TableauError>;

/// Arm cell `(r, c)` with `c >= r` pairs with leg cell `(c + 1, r)`.
fn mirror_threshold(cell: Cell) -> Cell {
    if cell.col >= cell.row {
        Cell::new(cell.col + 1, cell.row)
    } else {
        Cell::new(cell.col, cell.row - 1)
    }
}

/// Arm cell `(r, c)` with `c > r` pairs with leg cell `(c - 1, r)`; cells
/// on or below the diagonal pair with `(c, r + 1)`.
fn mirror_conjugate_threshold(cell: Cell) -> Cell {
    if cell.col > cell.row {
        Cell::new(cell.col - 1, cell.row)
    } else {
        Cell::new(cell.col, cell.row + 1)
    }
}

struct GraphInsertion {
    class: MatrixClass,
    insert: fn(&Tableau, usize) -> (Tableau, Cell),
    reverse: Reverse,
    mirror: Mirror,
    /// Sort key for edges `(i, j)`, `i <= j`.
    order: fn(&(usize, usize)) -> (usize, isize),
    /// The shape condition the output must meet.
    shape_ok: fn(&Tableau) -> bool,
}

const BUR1: GraphInsertion = GraphInsertion {
    class: MatrixClass::NsymTr0,
    insert: row_insert,
    reverse: reverse_row_insert,
    mirror: mirror_threshold,
    order: |&(i, j)| (j, -(i as isize)),
    shape_ok: |t| t.shape().is_threshold(),
};

const BUR2: GraphInsertion = GraphInsertion {
    class: MatrixClass::Nsym,
    insert: col_insert,
    reverse: reverse_col_insert,
    mirror: mirror_conjugate_threshold,
    order: |&(i, j)| (j, i as isize),
    shape_ok: |t| t.shape().conjugate().is_threshold(),
};

impl GraphInsertion {
    fn forward(&self, a: &IntMatrix) -> Result<Tableau, CorrespondenceError> {
        if !self.class.contains(a) {
            return Err(CorrespondenceError::ClassViolation { class: self.class });
        }
        let n = a.nrows();
        let mut edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| a.get(i, j) == 1)
            .map(|(i, j)| (i + 1, j + 1))
            .collect();
        edges.sort_by_key(self.order);

        let violated = |rows: &[Vec<usize>]| CorrespondenceError::ThresholdViolated {
            shape: rows.iter().map(Vec::len).collect(),
        };
        let mut p = Tableau::empty();
        for (i, j) in edges {
            let (next, cell) = (self.insert)(&p, i);
            let target = (self.mirror)(cell);
            let mut rows = next.into_rows();
            let fits = rows.len() + 1 >= target.row
                && rows.get(target.row - 1).map_or(0, Vec::len) + 1 == target.col;
            if !fits {
                return Err(violated(&rows));
            }
            place(&mut rows, target, j);
            p = validate(rows.clone(), n).map_err(|_| violated(&rows))?;
        }
        if !(self.shape_ok)(&p) {
            return Err(violated(p.rows()));
        }
        Ok(p)
    }

    fn inverse(&self, p: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
        if !(self.shape_ok)(p) {
            return Err(CorrespondenceError::ThresholdViolated {
                shape: p.shape().parts().to_vec(),
            });
        }
        let n = p.max_entry().unwrap_or(0);
        let mut a = IntMatrix::zeros(n, n);
        let mut cur = p.clone();
        while let Some(top) = cur.max_entry() {
            // topmost corner holding the largest letter whose mirror partner
            // is a corner once it is removed
            let step = cur
                .corners()
                .into_iter()
                .filter(|&c| cur.get(c) == Some(top))
                .find_map(|placed| {
                    let mut rows = cur.rows().to_vec();
                    rows[placed.row - 1].pop();
                    if rows[placed.row - 1].is_empty() {
                        rows.pop();
                    }
                    let rest = Tableau::from_rows_unchecked(rows);
                    let inserted = rest
                        .corners()
                        .into_iter()
                        .find(|&c| (self.mirror)(c) == placed)?;
                    (self.reverse)(&rest, inserted).ok()
                });
            let Some((prev, low)) = step else {
                return Err(CorrespondenceError::NotCoherent);
            };
            let (i, j) = (low - 1, top - 1);
            if a.get(i, j) != 0 {
                return Err(CorrespondenceError::NotCoherent);
            }
            *a.get_mut(i, j) = 1;
            *a.get_mut(j, i) = 1;
            cur = prev;
        }
        if self.forward(&a).as_ref() != Ok(p) {
            return Err(CorrespondenceError::NotCoherent);
        }
        Ok(a)
    }
}

/// Simple graphs (symmetric 0/1, zero diagonal) to tableaux of threshold
/// shape, weight = degree sequence = row sums.
pub fn bur1(a: &IntMatrix) -> Result<Tableau, CorrespondenceError> {
    BUR1.forward(a)
}

/// Inverse of [`bur1`], sized by the largest letter of `p`.
pub fn bur1_inverse(p: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    BUR1.inverse(p)
}

/// Graphs with loops (symmetric 0/1) to tableaux whose conjugate shape is
/// threshold, weight = [`IntMatrix::graph_degrees`].
pub fn bur2(a: &IntMatrix) -> Result<Tableau, CorrespondenceError> {
    BUR2.forward(a)
}

/// Inverse of [`bur2`], sized by the largest letter of `p`.
pub fn bur2_inverse(p: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    BUR2.inverse(p)
}
