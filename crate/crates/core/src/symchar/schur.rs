use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{SymCharError, SymPoly};
use crate::partitions::{partitions_of, Partition};
use crate::tableaux::{kostka, Weight};

/// Coefficients `c_λ` of a Schur expansion `Σ c_λ s_λ`.
pub type SchurExpansion = BTreeMap<Partition, BigInt>;

/// One term `c·s_λ` as it goes on the wire: `{"lambda": […], "mult": c}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub lambda: Partition,
    #[serde(with = "super::poly::bigint_json")]
    pub mult: BigInt,
}

/// Terms of `e` in descending order of `λ`.
pub fn schur_terms(e: &SchurExpansion) -> Vec<SchurTerm> {
    e.iter()
        .rev()
        .map(|(lambda, c)| SchurTerm {
            lambda: lambda.clone(),
            mult: c.clone(),
        })
        .collect()
}

/// `s_λ(x_1,…,x_n)`: the coefficient of `m_μ` is the Kostka number
/// `K_{λμ}`. Zero iff `λ` has more than `n` parts.
pub fn schur_poly(lambda: &Partition, n: usize) -> SymPoly {
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    let terms = partitions_of(lambda.size(), Some(n)).into_iter().map(|mu| {
        let w = Weight(mu.padded(n).expect("at most n parts"));
        let k = kostka(lambda, &w).expect("sizes agree");
        (mu, BigInt::from(k))
    });
    SymPoly::from_terms(n, terms).expect("keys have at most n parts")
}

/// The unique `c_λ` with `f = Σ c_λ s_λ`.
///
/// Repeatedly takes the lexicographically greatest monomial key `μ` of the
/// remainder, records its coefficient `c` as `c_μ` and subtracts
/// `c · s_μ`. Since `K_{λμ} ≠ 0` only for `λ ≥ μ` in dominance order, and
/// dominance refines to lex order, each step removes the leading key.
pub fn schur_expand(f: &SymPoly) -> Result<SchurExpansion, SymCharError> {
    let n = f.vars();
    let mut degrees: Vec<usize> = f.terms().map(|(k, _)| k.size()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let budget: usize = degrees
        .iter()
        .map(|&d| partitions_of(d, Some(n)).len())
        .sum();

    let mut rest = f.clone();
    let mut out = SchurExpansion::new();
    for _ in 0..=budget {
        let Some((mu, c)) = rest.leading().map(|(k, c)| (k.clone(), c.clone())) else {
            return Ok(out);
        };
        rest = rest.sub(&schur_poly(&mu, n).scale(&c))?;
        out.insert(mu, c);
    }
    Err(SymCharError::NonTermination)
}

/// Power-sum symmetric polynomial `p_ρ = Π_r (x_1^r + … + x_n^r)`.
pub fn power_sum(rho: &Partition, n: usize) -> SymPoly {
    rho.parts().iter().fold(SymPoly::one(n), |acc, &r| {
        let pr = SymPoly::monomial(Partition::from_weight(&[r]), n);
        acc.mul(&pr).expect("same variable count")
    })
}
