use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ClassFunction, Permutation, SymGroupError};

/// Which signed permutation action on involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelVariant {
    /// Sign `(−1)^{i₁(g,w)}`, on involutions with `k` fixed points.
    Rho1,
    /// Sign `(−1)^{i₂(g,w)}`, on fixed-point-free involutions.
    Rho2,
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelVariant::Rho1 => "rho1",
            ModelVariant::Rho2 => "rho2",
        })
    }
}

impl FromStr for ModelVariant {
    type Err = SymGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rho1" => Ok(ModelVariant::Rho1),
            "rho2" => Ok(ModelVariant::Rho2),
            other => Err(SymGroupError::Parse(other.to_string())),
        }
    }
}

/// `M_{n,k}`: involutions of `S_n` with exactly `k` fixed points, in
/// lexicographic order of one-line notation. Empty unless `n − k` is even
/// and non-negative.
pub fn involutions(n: usize, k: usize) -> Vec<Permutation> {
    fn go(images: &mut Vec<Option<usize>>, fixed_left: usize, out: &mut Vec<Permutation>) {
        let Some(i) = images.iter().position(Option::is_none) else {
            if fixed_left == 0 {
                out.push(Permutation::from_zero_based(
                    images.iter().map(|x| x.expect("assigned")).collect(),
                ));
            }
            return;
        };
        if fixed_left > 0 {
            images[i] = Some(i);
            go(images, fixed_left - 1, out);
            images[i] = None;
        }
        for j in i + 1..images.len() {
            if images[j].is_none() {
                images[i] = Some(j);
                images[j] = Some(i);
                go(images, fixed_left, out);
                images[i] = None;
                images[j] = None;
            }
        }
    }
    let mut out = Vec::new();
    if k <= n && (n - k).is_multiple_of(2) {
        go(&mut vec![None; n], k, &mut out);
    }
    out
}

/// The 2-cycles `(i, j)` of `w`, 0-based with `i < j`, in lexicographic
/// order.
fn two_cycles(w: &Permutation) -> Vec<(usize, usize)> {
    (0..w.degree())
        .filter_map(|i| {
            let j = w.at(i);
            (i < j).then_some((i, j))
        })
        .collect()
}

fn check_pair(g: &Permutation, w: &Permutation) -> Result<(), SymGroupError> {
    if g.degree() != w.degree() {
        return Err(SymGroupError::DegreeMismatch {
            left: g.degree(),
            right: w.degree(),
        });
    }
    if !w.is_involution() {
        return Err(SymGroupError::NotInvolution(w.one_line()));
    }
    Ok(())
}

/// `i₁(g,w)`: number of `i < j` with `w(i) = j` and `g(i) > g(j)`.
pub fn i1(g: &Permutation, w: &Permutation) -> Result<usize, SymGroupError> {
    check_pair(g, w)?;
    Ok(i1_unchecked(g, w))
}

fn i1_unchecked(g: &Permutation, w: &Permutation) -> usize {
    two_cycles(w)
        .into_iter()
        .filter(|&(i, j)| g.at(i) > g.at(j))
        .count()
}

/// `i₂(g,w) = i₁(g,w) + #{(i,j) < (k,l)}` over 2-cycles of `w` whose
/// images under `g` compare the other way. Pairs are sorted before being
/// compared lexicographically, on both sides.
pub fn i2(g: &Permutation, w: &Permutation) -> Result<usize, SymGroupError> {
    check_pair(g, w)?;
    if w.fixed_points() > 0 {
        return Err(SymGroupError::HasFixedPoints(w.one_line()));
    }
    Ok(i2_unchecked(g, w))
}

fn i2_unchecked(g: &Permutation, w: &Permutation) -> usize {
    let sorted = |a: usize, b: usize| (a.min(b), a.max(b));
    let images: Vec<(usize, usize)> = two_cycles(w)
        .into_iter()
        .map(|(i, j)| sorted(g.at(i), g.at(j)))
        .collect();
    let mut crossings = 0;
    for (a, p) in images.iter().enumerate() {
        crossings += images[a + 1..].iter().filter(|q| p > q).count();
    }
    i1_unchecked(g, w) + crossings
}

fn check_variant(n: usize, k: usize, variant: ModelVariant) -> Result<(), SymGroupError> {
    if variant == ModelVariant::Rho2 && (k != 0 || !n.is_multiple_of(2)) {
        return Err(SymGroupError::Rho2Constraint { n, k });
    }
    Ok(())
}

/// Trace of `ρ(g)` on `C[M_{n,k}]`: the sum of `(−1)^{i(g,w)}` over
/// involutions `w` fixed by conjugation by `g`.
pub fn model_character_at(
    k: usize,
    variant: ModelVariant,
    g: &Permutation,
) -> Result<i64, SymGroupError> {
    let n = g.degree();
    check_variant(n, k, variant)?;
    Ok(trace(&involutions(n, k), variant, g))
}

fn trace(basis: &[Permutation], variant: ModelVariant, g: &Permutation) -> i64 {
    basis
        .iter()
        .filter(|w| w.conjugate_by(g) == **w)
        .map(|w| {
            let exponent = match variant {
                ModelVariant::Rho1 => i1_unchecked(g, w),
                ModelVariant::Rho2 => i2_unchecked(g, w),
            };
            if exponent % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum()
}

/// The character of `ρ₁` or `ρ₂` on `C[M_{n,k}]`, evaluated at the
/// canonical representative of each cycle type.
pub fn model_character(
    n: usize,
    k: usize,
    variant: ModelVariant,
) -> Result<ClassFunction, SymGroupError> {
    check_variant(n, k, variant)?;
    let basis = involutions(n, k);
    Ok(ClassFunction::from_fn(n, |rho| {
        trace(&basis, variant, &Permutation::of_cycle_type(rho))
    }))
}
