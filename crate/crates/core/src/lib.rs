//! Tableau bijections and exact checks of the representation-theoretic
//! decompositions they induce.
//!
//! * [`partitions`]: partitions, conjugation, Frobenius coordinates,
//!   threshold partitions;
//! * [`tableaux`]: semistandard tableaux, Kostka numbers, insertion;
//! * [`correspondences`]: RSK, dual RSK, Burge and the threshold-shape
//!   bijections on symmetric 0/1 matrices;
//! * [`symchar`]: symmetric polynomials in the monomial basis, Schur
//!   polynomials, characters of the GL_n constructions;
//! * [`symgroup`]: permutations, class functions, Murnaghan–Nakayama
//!   characters, Gelfand-model and induced characters;
//! * [`harness`]: the registry of named, parameterized identity checks.

pub mod correspondences;
pub mod harness;
pub mod partitions;
pub mod symchar;
pub mod symgroup;
pub mod tableaux;
