//! RSK, dual RSK and Burge, all driven by one loop: read the biword left
//! to right, insert the bottom letter into `P`, record the top letter in
//! `Q` at the new cell.

use super::matrix::{Biword, BiwordOrder, IntMatrix};
use super::CorrespondenceError;
use crate::tableaux::{
    col_insert, dual_row_insert, reverse_col_insert, reverse_dual_row_insert, reverse_row_insert,
    row_insert, Cell, RowStrictArray, Tableau,
};

pub(crate) fn place(rows: &mut Vec<Vec<usize>>, cell: Cell, letter: usize) {
    if rows.len() < cell.row {
        rows.resize(cell.row, Vec::new());
    }
    let row = &mut rows[cell.row - 1];
    assert_eq!(row.len() + 1, cell.col, "new cell must extend its row");
    row.push(letter);
}

fn run<P>(biword: &Biword, mut p: P, insert: impl Fn(&P, usize) -> (P, Cell)) -> (P, Tableau) {
    let mut q: Vec<Vec<usize>> = Vec::new();
    for &(u, v) in &biword.pairs {
        let (next, cell) = insert(&p, v);
        p = next;
        place(&mut q, cell, u);
    }
    (p, Tableau::from_rows_unchecked(q))
}

/// Rightmost cell holding the largest entry of `q`; always an outer corner.
fn last_recorded(q: &[Vec<usize>]) -> Option<(Cell, usize)> {
    let top = q.iter().filter_map(|r| r.last().copied()).max()?;
    let (r, c) = q
        .iter()
        .enumerate()
        .filter_map(|(r, row)| row.iter().rposition(|&x| x == top).map(|c| (r, c)))
        .max_by_key(|&(_, c)| c)?;
    Some((Cell::new(r + 1, c + 1), top))
}

fn unrun<P>(
    p: P,
    q: &Tableau,
    reverse: impl Fn(&P, Cell) -> Result<(P, usize), crate::tableaux::TableauError>,
) -> Result<Biword, CorrespondenceError> {
    let mut p = p;
    let mut q = q.rows().to_vec();
    let mut pairs = Vec::with_capacity(q.iter().map(Vec::len).sum());
    while let Some((cell, u)) = last_recorded(&q) {
        let (prev, v) = reverse(&p, cell).map_err(|_| CorrespondenceError::NotCoherent)?;
        p = prev;
        q[cell.row - 1].pop();
        if q[cell.row - 1].is_empty() {
            q.pop();
        }
        pairs.push((u, v));
    }
    pairs.reverse();
    Ok(Biword { pairs })
}

/// The RSK correspondence `A ↦ (P, Q)` with `wt(P)` the column sums and
/// `wt(Q)` the row sums of `A`.
pub fn rsk(a: &IntMatrix) -> (Tableau, Tableau) {
    let biword = Biword::from_matrix(a, BiwordOrder::Rsk);
    run(&biword, Tableau::empty(), row_insert)
}

/// Inverse of [`rsk`]. The result is sized by the largest letters of `Q`
/// and `P`; pad with [`IntMatrix::padded`] to recover trailing zero rows
/// or columns.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    if p.shape() != q.shape() {
        return Err(CorrespondenceError::ShapeMismatch {
            p: p.shape(),
            q: q.shape(),
        });
    }
    let a = unrun(p.clone(), q, reverse_row_insert)?.to_matrix();
    if rsk(&a) != (p.clone(), q.clone()) {
        return Err(CorrespondenceError::NotCoherent);
    }
    Ok(a)
}

/// Dual RSK on 0/1 matrices: dual row insertion builds a row-strict array
/// whose transpose is `P`, so `shape(P)` is conjugate to `shape(Q)`.
pub fn dual_rsk(a: &IntMatrix) -> Result<(Tableau, Tableau), CorrespondenceError> {
    if !a.is_zero_one() {
        return Err(CorrespondenceError::NotZeroOne);
    }
    let biword = Biword::from_matrix(a, BiwordOrder::Rsk);
    let (array, q) = run(&biword, RowStrictArray::empty(), dual_row_insert);
    Ok((array.transpose(), q))
}

pub fn dual_rsk_inverse(p: &Tableau, q: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    if p.shape() != q.shape().conjugate() {
        return Err(CorrespondenceError::ShapeNotConjugate {
            p: p.shape(),
            q: q.shape(),
        });
    }
    let array = RowStrictArray::from_transpose(p);
    let a = unrun(array, q, reverse_dual_row_insert)?.to_matrix();
    if dual_rsk(&a)? != (p.clone(), q.clone()) {
        return Err(CorrespondenceError::NotCoherent);
    }
    Ok(a)
}

/// The Burge correspondence: bottom letters of the Burge-ordered biword
/// are column-inserted.
pub fn burge(a: &IntMatrix) -> (Tableau, Tableau) {
    let biword = Biword::from_matrix(a, BiwordOrder::Burge);
    run(&biword, Tableau::empty(), col_insert)
}

pub fn burge_inverse(p: &Tableau, q: &Tableau) -> Result<IntMatrix, CorrespondenceError> {
    if p.shape() != q.shape() {
        return Err(CorrespondenceError::ShapeMismatch {
            p: p.shape(),
            q: q.shape(),
        });
    }
    let a = unrun(p.clone(), q, reverse_col_insert)?.to_matrix();
    if burge(&a) != (p.clone(), q.clone()) {
        return Err(CorrespondenceError::NotCoherent);
    }
    Ok(a)
}
