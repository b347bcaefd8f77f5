//! Bumping primitives and their reverses.
//!
//! * row insertion bumps the leftmost entry `> x` in each row;
//! * column insertion bumps the topmost entry `>= x` in each column;
//! * dual row insertion bumps the leftmost entry `>= x`, and acts on
//!   row-strict arrays (rows strictly increasing, columns weakly
//!   increasing) whose transposes are tableaux.
//!
//! Each `reverse_*` takes an outer corner produced by its forward
//! operation and returns the array before insertion together with the
//! letter that was inserted.

use super::{corners_of, transpose, Cell, Tableau, TableauError};

/// A filling with strictly increasing rows and weakly increasing columns,
/// the intermediate object of dual RSK.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RowStrictArray {
    rows: Vec<Vec<usize>>,
}

impl RowStrictArray {
    pub fn empty() -> Self {
        RowStrictArray::default()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The transpose, which is a semistandard tableau.
    pub fn transpose(&self) -> Tableau {
        Tableau::from_rows_unchecked(transpose(&self.rows))
    }

    /// Inverse of [`RowStrictArray::transpose`].
    pub fn from_transpose(t: &Tableau) -> Self {
        RowStrictArray {
            rows: t.transpose_rows(),
        }
    }

    pub fn is_valid(&self) -> bool {
        let rows = &self.rows;
        rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && (1..rows.len()).all(|i| {
                rows[i].len() <= rows[i - 1].len()
                    && rows[i].iter().zip(&rows[i - 1]).all(|(b, a)| a <= b)
            })
    }
}

fn bump_rows(
    mut rows: Vec<Vec<usize>>,
    mut x: usize,
    bumps: impl Fn(usize, usize) -> bool,
) -> (Vec<Vec<usize>>, Cell) {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| bumps(y, x)) {
            Some(c) => x = std::mem::replace(&mut row[c], x),
            None => {
                row.push(x);
                let cell = Cell::new(r + 1, row.len());
                return (rows, cell);
            }
        }
    }
    rows.push(vec![x]);
    let r = rows.len();
    (rows, Cell::new(r, 1))
}

fn unbump_rows(
    mut rows: Vec<Vec<usize>>,
    cell: Cell,
    returns_to: impl Fn(usize, usize) -> bool,
) -> Result<(Vec<Vec<usize>>, usize), TableauError> {
    if !corners_of(&rows).contains(&cell) {
        return Err(TableauError::NotACorner { cell });
    }
    let r = cell.row - 1;
    let mut x = rows[r].pop().expect("corner row is nonempty");
    if rows[r].is_empty() {
        rows.pop();
    }
    for row in rows[..r].iter_mut().rev() {
        // rightmost position the bumped letter can have come from
        let c = row
            .iter()
            .rposition(|&y| returns_to(y, x))
            .expect("bumped letter has a source in the row above");
        x = std::mem::replace(&mut row[c], x);
    }
    Ok((rows, x))
}

/// Schensted row insertion of `x` into `t`.
pub fn row_insert(t: &Tableau, x: usize) -> (Tableau, Cell) {
    let (rows, cell) = bump_rows(t.rows().to_vec(), x, |y, x| y > x);
    (Tableau::from_rows_unchecked(rows), cell)
}

/// Undoes [`row_insert`] whose new cell was `cell`.
pub fn reverse_row_insert(t: &Tableau, cell: Cell) -> Result<(Tableau, usize), TableauError> {
    let (rows, x) = unbump_rows(t.rows().to_vec(), cell, |y, x| y < x)?;
    Ok((Tableau::from_rows_unchecked(rows), x))
}

/// Dual row insertion: `x` bumps the leftmost entry `>= x`.
pub fn dual_row_insert(a: &RowStrictArray, x: usize) -> (RowStrictArray, Cell) {
    let (rows, cell) = bump_rows(a.rows.clone(), x, |y, x| y >= x);
    let out = RowStrictArray { rows };
    debug_assert!(out.is_valid());
    (out, cell)
}

/// Undoes [`dual_row_insert`] whose new cell was `cell`.
pub fn reverse_dual_row_insert(
    a: &RowStrictArray,
    cell: Cell,
) -> Result<(RowStrictArray, usize), TableauError> {
    let (rows, x) = unbump_rows(a.rows.clone(), cell, |y, x| y <= x)?;
    Ok((RowStrictArray { rows }, x))
}

/// Column insertion: `x` bumps the topmost entry `>= x` of each column in
/// turn, starting from the first.
pub fn col_insert(t: &Tableau, x: usize) -> (Tableau, Cell) {
    let mut rows = t.rows().to_vec();
    let mut x = x;
    let mut c = 0;
    loop {
        let height = rows.iter().take_while(|r| r.len() > c).count();
        match (0..height).find(|&r| rows[r][c] >= x) {
            Some(r) => x = std::mem::replace(&mut rows[r][c], x),
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                rows[height].push(x);
                let out = Tableau::from_rows_unchecked(rows);
                return (out, Cell::new(height + 1, c + 1));
            }
        }
        c += 1;
    }
}

/// Undoes [`col_insert`] whose new cell was `cell`.
pub fn reverse_col_insert(t: &Tableau, cell: Cell) -> Result<(Tableau, usize), TableauError> {
    let mut rows = t.rows().to_vec();
    if !corners_of(&rows).contains(&cell) {
        return Err(TableauError::NotACorner { cell });
    }
    let r = cell.row - 1;
    let mut x = rows[r].pop().expect("corner row is nonempty");
    if rows[r].is_empty() {
        rows.pop();
    }
    for c in (0..cell.col - 1).rev() {
        let height = rows.iter().take_while(|row| row.len() > c).count();
        // bottom-most entry of the column that is <= the returning letter
        let r = (0..height)
            .rev()
            .find(|&r| rows[r][c] <= x)
            .expect("bumped letter has a source in the column to the left");
        x = std::mem::replace(&mut rows[r][c], x);
    }
    Ok((Tableau::from_rows_unchecked(rows), x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use crate::tableaux::{enumerate_tableaux, validate};

    fn t(rows: &[&[usize]]) -> Tableau {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        validate(rows, 9).unwrap()
    }

    #[test]
    fn row_insert_example() {
        let (a, _) = row_insert(&Tableau::empty(), 2);
        let (b, cell) = row_insert(&a, 1);
        assert_eq!(b, t(&[&[1], &[2]]));
        assert_eq!(cell, Cell::new(2, 1));
    }

    #[test]
    fn col_insert_example() {
        let (out, cell) = col_insert(&t(&[&[2]]), 1);
        assert_eq!(out, t(&[&[1, 2]]));
        assert_eq!(cell, Cell::new(1, 2));
    }

    #[test]
    fn dual_row_insert_example() {
        let (a, _) = dual_row_insert(&RowStrictArray::empty(), 1);
        let (b, cell) = dual_row_insert(&a, 1);
        assert_eq!(b.rows(), &[vec![1], vec![1]]);
        assert_eq!(cell, Cell::new(2, 1));
    }

    #[test]
    fn reverse_rejects_non_corner() {
        let x = t(&[&[1, 2], &[3]]);
        assert_eq!(
            reverse_row_insert(&x, Cell::new(1, 1)),
            Err(TableauError::NotACorner {
                cell: Cell::new(1, 1)
            })
        );
        assert!(reverse_col_insert(&x, Cell::new(2, 2)).is_err());
        assert!(reverse_dual_row_insert(&RowStrictArray::empty(), Cell::new(1, 1)).is_err());
    }

    /// Every tableau of size <= 5 over an alphabet of size <= 3.
    fn small_tableaux() -> Vec<Tableau> {
        let mut out = Vec::new();
        for d in 0..=5 {
            for lambda in partitions_of(d, Some(3)) {
                out.extend(enumerate_tableaux(&lambda, 3));
            }
        }
        out
    }

    #[test]
    fn row_insertion_round_trip_exhaustive() {
        for tab in small_tableaux() {
            for x in 1..=3 {
                let (out, cell) = row_insert(&tab, x);
                assert!(validate(out.rows().to_vec(), 3).is_ok());
                assert_eq!(out.size(), tab.size() + 1);
                assert_eq!(reverse_row_insert(&out, cell), Ok((tab.clone(), x)));
            }
        }
    }

    #[test]
    fn col_insertion_round_trip_exhaustive() {
        for tab in small_tableaux() {
            for x in 1..=3 {
                let (out, cell) = col_insert(&tab, x);
                assert!(validate(out.rows().to_vec(), 3).is_ok());
                assert_eq!(reverse_col_insert(&out, cell), Ok((tab.clone(), x)));
            }
        }
    }

    #[test]
    fn dual_insertion_round_trip_exhaustive() {
        // row-strict arrays over 1..=3 are exactly transposes of tableaux over 1..=3
        for tab in small_tableaux() {
            let a = RowStrictArray::from_transpose(&tab);
            assert!(a.is_valid());
            for x in 1..=3 {
                let (out, cell) = dual_row_insert(&a, x);
                assert!(out.is_valid());
                assert!(validate(out.transpose().rows().to_vec(), 3).is_ok());
                assert_eq!(reverse_dual_row_insert(&out, cell), Ok((a.clone(), x)));
            }
        }
    }
}
