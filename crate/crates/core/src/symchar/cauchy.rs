use serde::Serialize;

use crate::correspondences::{enumerate_matrices, MatrixClass};
use crate::partitions::partitions_of;
use crate::tableaux::{kostka, Weight};

/// Both sides of a Cauchy-type identity at one pair of margins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarginRecord {
    /// Row sums.
    pub mu: Weight,
    /// Column sums.
    pub nu: Weight,
    /// Number of matrices with these margins.
    pub matrices: u64,
    /// Number of tableau pairs of matching (or conjugate) shape.
    pub tableau_pairs: u64,
}

impl MarginRecord {
    pub fn holds(&self) -> bool {
        self.matrices == self.tableau_pairs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub dual: bool,
    pub records: Vec<MarginRecord>,
    pub failures: Vec<MarginRecord>,
}

impl CauchyReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For all `μ ∈ ℕ^m`, `ν ∈ ℕ^n` of total `d`:
/// `|M_μν| = Σ_{λ⊢d} K_{λν} K_{λμ}`.
pub fn cauchy_check(m: usize, n: usize, d: usize) -> CauchyReport {
    check(m, n, d, false)
}

/// For all `μ ∈ ℕ^m`, `ν ∈ ℕ^n` of total `d`:
/// `|N_μν| = Σ_{λ⊢d} K_{λ'ν} K_{λμ}`.
pub fn dual_cauchy_check(m: usize, n: usize, d: usize) -> CauchyReport {
    check(m, n, d, true)
}

fn check(m: usize, n: usize, d: usize, dual: bool) -> CauchyReport {
    let class = if dual { MatrixClass::N } else { MatrixClass::M };
    let shapes = partitions_of(d, None);
    let mut records = Vec::new();
    for mu in Weight::all(d, m) {
        for nu in Weight::all(d, n) {
            let matrices = enumerate_matrices(class, &mu, &nu)
                .expect("margins share the total d")
                .len() as u64;
            let tableau_pairs = shapes
                .iter()
                .map(|lambda| {
                    let p_shape = if dual {
                        lambda.conjugate()
                    } else {
                        lambda.clone()
                    };
                    let kp = kostka(&p_shape, &nu).expect("sizes agree");
                    let kq = kostka(lambda, &mu).expect("sizes agree");
                    kp * kq
                })
                .sum();
            records.push(MarginRecord {
                mu: mu.clone(),
                nu,
                matrices,
                tableau_pairs,
            });
        }
    }
    let failures = records.iter().filter(|r| !r.holds()).cloned().collect();
    CauchyReport {
        m,
        n,
        d,
        dual,
        records,
        failures,
    }
}
