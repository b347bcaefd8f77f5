//! Permutations, class functions and irreducible characters of `S_n`,
//! the Gelfand-model characters on involutions, and characters induced
//! from involution centralizers.

use thiserror::Error;

use crate::partitions::Partition;

mod class_function;
mod induced;
mod model;
mod permutation;

pub use class_function::{
    character_table, class_size, decompose, inner_product, mn_character, z, ClassFunction,
};
pub use induced::{
    centralizer_subgroup, induced_model_character, InducedCharacter, MAX_INDUCTION_DEGREE,
};
pub use model::{i1, i2, involutions, model_character, model_character_at, ModelVariant};
pub use permutation::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymGroupError {
    #[error("{0:?} is not a permutation")]
    NotAPermutation(Vec<usize>),
    #[error("{0:?} is not an involution")]
    NotInvolution(Vec<usize>),
    #[error("involution {0:?} has fixed points")]
    HasFixedPoints(Vec<usize>),
    #[error("rho2 is defined only for k = 0 and even n (got n = {n}, k = {k})")]
    Rho2Constraint { n: usize, k: usize },
    #[error("degrees {left} and {right} differ")]
    DegreeMismatch { left: usize, right: usize },
    #[error("multiplicity of {lambda} is {value}, not an integer")]
    NonIntegralMultiplicity { lambda: Partition, value: String },
    #[error("n = {n} is not 2l + {k}, or the character needs k = 0")]
    SizeMismatch { n: usize, k: usize },
    #[error("n = {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error("class function on S_{n} must have a value at every cycle type")]
    IncompleteClassFunction { n: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}
