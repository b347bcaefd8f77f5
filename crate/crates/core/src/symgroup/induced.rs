use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ClassFunction, Permutation, SymGroupError};

/// Largest degree for which induction sums over all of `S_n`.
pub const MAX_INDUCTION_DEGREE: usize = 8;

/// Character of `B_{2l} × S_k` to induce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InducedCharacter {
    /// `e_{2l} ⊗ 1_{S_k}`: sign of the `B_{2l}` component.
    ETensorOne,
    /// `η_l` on `B_{2l}` (requires `k = 0`).
    Eta,
    /// The trivial character.
    TrivialB,
}

impl fmt::Display for InducedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InducedCharacter::ETensorOne => "e-tensor-one",
            InducedCharacter::Eta => "eta",
            InducedCharacter::TrivialB => "trivial-B",
        })
    }
}

impl FromStr for InducedCharacter {
    type Err = SymGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "e-tensor-one" => Ok(InducedCharacter::ETensorOne),
            "eta" => Ok(InducedCharacter::Eta),
            "trivial-B" | "trivial-b" => Ok(InducedCharacter::TrivialB),
            other => Err(SymGroupError::Parse(other.to_string())),
        }
    }
}

/// `(1 2)(3 4)⋯(2l−1 2l)` in `S_n`, fixing `2l+1, …, n`.
fn block_involution(n: usize, l: usize) -> Permutation {
    Permutation::from_zero_based((0..n).map(|i| if i < 2 * l { i ^ 1 } else { i }).collect())
}

/// `B_{2l} × S_k ⊂ S_{2l+k}`: the centralizer of
/// [`block_involution`], found by filtering the whole group.
pub fn centralizer_subgroup(l: usize, k: usize) -> Vec<Permutation> {
    let n = 2 * l + k;
    let w0 = block_involution(n, l);
    Permutation::all(n)
        .into_iter()
        .filter(|h| w0.conjugate_by(h) == w0)
        .collect()
}

/// `η_l(b) = sgn(σ)·(−1)^s` where `b` permutes the 2-blocks `{2t−1, 2t}`
/// by `σ` and reverses `s` of them.
fn eta(h: &Permutation, l: usize) -> i64 {
    let blocks = Permutation::from_zero_based((0..l).map(|t| h.at(2 * t) / 2).collect());
    let reversed = (0..l).filter(|&t| h.at(2 * t) % 2 == 1).count();
    blocks.sign() * if reversed % 2 == 0 { 1 } else { -1 }
}

/// Sign of `h` restricted to `{1, …, 2l}`.
fn e(h: &Permutation, l: usize) -> i64 {
    Permutation::from_zero_based((0..2 * l).map(|i| h.at(i)).collect()).sign()
}

/// `Ind_{B_{2l}×S_k}^{S_n} χ` for `n = 2l + k`, by
/// `(1/|H|) Σ_{x ∈ S_n} χ°(x g x⁻¹)` at each canonical class
/// representative `g`.
pub fn induced_model_character(
    n: usize,
    k: usize,
    which: InducedCharacter,
) -> Result<ClassFunction, SymGroupError> {
    if k > n || !(n - k).is_multiple_of(2) || (which == InducedCharacter::Eta && k != 0) {
        return Err(SymGroupError::SizeMismatch { n, k });
    }
    if n > MAX_INDUCTION_DEGREE {
        return Err(SymGroupError::TooLarge {
            n,
            max: MAX_INDUCTION_DEGREE,
        });
    }
    let l = (n - k) / 2;
    let subgroup: HashMap<Permutation, i64> = centralizer_subgroup(l, k)
        .into_iter()
        .map(|h| {
            let v = match which {
                InducedCharacter::ETensorOne => e(&h, l),
                InducedCharacter::Eta => eta(&h, l),
                InducedCharacter::TrivialB => 1,
            };
            (h, v)
        })
        .collect();
    let order = subgroup.len() as i64;
    let group = Permutation::all(n);
    Ok(ClassFunction::from_fn(n, |rho| {
        let g = Permutation::of_cycle_type(rho);
        let total: i64 = group
            .iter()
            .filter_map(|x| subgroup.get(&g.conjugate_by(x)))
            .sum();
        debug_assert_eq!(total % order, 0);
        total / order
    }))
}
