//! Matrix ↔ tableau bijections: RSK, dual RSK, Burge, their restrictions
//! to symmetric matrices, and the threshold-shape bijections on symmetric
//! 0/1 matrices.

use thiserror::Error;

use crate::partitions::Partition;
use crate::tableaux::Weight;

mod insertion;
mod matrix;
mod symmetric;

pub use insertion::{burge, burge_inverse, dual_rsk, dual_rsk_inverse, rsk, rsk_inverse};
pub use matrix::{
    biword_to_matrix, enumerate_by_degree, enumerate_matrices, matrix_to_biword, Biword,
    BiwordOrder, IntMatrix, MatrixClass,
};
pub use symmetric::{
    bur1, bur1_inverse, bur2, bur2_inverse, burge_symmetric, burge_symmetric_inverse,
    rsk_symmetric, rsk_symmetric_inverse,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorrespondenceError {
    #[error("row {row} has a different length from row 1")]
    Ragged { row: usize },
    #[error("matrix has an entry other than 0 or 1")]
    NotZeroOne,
    #[error("P has shape {p}, Q has shape {q}")]
    ShapeMismatch { p: Partition, q: Partition },
    #[error("P has shape {p}, which is not conjugate to the shape {q} of Q")]
    ShapeNotConjugate { p: Partition, q: Partition },
    #[error("reverse bumping does not reproduce the given tableaux")]
    NotCoherent,
    #[error("matrix is not square and symmetric")]
    NotSymmetric,
    #[error("symmetric matrix produced P != Q")]
    SymmetryViolated,
    #[error("matrix is not in class {class:?}")]
    ClassViolation { class: MatrixClass },
    #[error("shape {shape:?} violates the threshold condition")]
    ThresholdViolated { shape: Vec<usize> },
    #[error("margins {mu:?} and {nu:?} are incompatible with the class")]
    MarginMismatch { mu: Weight, nu: Weight },
    #[error("unknown matrix class {0:?}")]
    UnknownClass(String),
}
