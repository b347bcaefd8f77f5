//! Symmetric polynomials in the monomial basis, Schur polynomials and
//! Schur expansion, characters of `GL_n`-constructions, and the Cauchy
//! coefficient identities.

use thiserror::Error;

mod cauchy;
mod construction;
pub(crate) mod poly;
mod schur;

pub use cauchy::{cauchy_check, dual_cauchy_check, CauchyReport, MarginRecord};
pub use construction::{character, Construction};
pub use poly::{orbit_size, ExponentMap, SymPoly};
pub use schur::{power_sum, schur_expand, schur_poly, schur_terms, SchurExpansion, SchurTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymCharError {
    #[error("polynomials in {left} and {right} variables cannot be combined")]
    VarCountMismatch { left: usize, right: usize },
    #[error("key {key:?} has more than {vars} parts")]
    TooManyParts { key: Vec<usize>, vars: usize },
    #[error("exponent map is not symmetric at monomial {monomial:?}")]
    NotSymmetric { monomial: Vec<usize> },
    #[error("Schur expansion did not terminate; input is not symmetric")]
    NonTermination,
    #[error("cannot parse {0:?}")]
    Parse(String),
}
