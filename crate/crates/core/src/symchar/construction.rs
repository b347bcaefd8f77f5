use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::ExponentMap;
use super::{SymCharError, SymPoly};

/// A polynomial representation of `GL_n` built from `C^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `Sym^d C^n`
    SymPower(usize),
    /// `∧^d C^n`
    ExtPower(usize),
    /// `Sym^l(∧² C^n)`
    SymOfExt2(usize),
    /// `Sym^l(Sym² C^n)`
    SymOfSym2(usize),
    /// `∧^l(∧² C^n)`
    ExtOfExt2(usize),
    /// `∧^l(Sym² C^n)`
    ExtOfSym2(usize),
    /// Tensor product of the factors; the empty product is the trivial
    /// representation.
    Tensor(Vec<Construction>),
}

impl Construction {
    pub fn tensor(factors: impl IntoIterator<Item = Construction>) -> Self {
        Construction::Tensor(factors.into_iter().collect())
    }

    /// Polynomial degree.
    pub fn degree(&self) -> usize {
        match self {
            Construction::SymPower(d) | Construction::ExtPower(d) => *d,
            Construction::SymOfExt2(l)
            | Construction::SymOfSym2(l)
            | Construction::ExtOfExt2(l)
            | Construction::ExtOfSym2(l) => 2 * l,
            Construction::Tensor(fs) => fs.iter().map(Construction::degree).sum(),
        }
    }

    /// Dimension from the closed binomial formulas; independent of the
    /// basis enumeration in [`character`].
    pub fn dimension(&self, n: usize) -> BigInt {
        let pairs_strict = binomial(n, 2);
        let pairs_weak = binomial(n + 1, 2);
        match self {
            Construction::SymPower(d) => multichoose(n, *d),
            Construction::ExtPower(d) => binomial(n, *d).into(),
            Construction::SymOfExt2(l) => multichoose(pairs_strict, *l),
            Construction::SymOfSym2(l) => multichoose(pairs_weak, *l),
            Construction::ExtOfExt2(l) => binomial(pairs_strict, *l).into(),
            Construction::ExtOfSym2(l) => binomial(pairs_weak, *l).into(),
            Construction::Tensor(fs) => fs.iter().map(|f| f.dimension(n)).product(),
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn multichoose(n: usize, k: usize) -> BigInt {
    if n == 0 {
        return BigInt::from(usize::from(k == 0));
    }
    BigInt::from(binomial(n + k - 1, k))
}

/// Weight vectors of the basis vectors of `C^n`, `∧²C^n` or `Sym²C^n`.
fn basis_weights(n: usize, pairs: Option<bool>) -> Vec<Vec<usize>> {
    let unit = |i: usize| {
        let mut w = vec![0; n];
        w[i] += 1;
        w
    };
    match pairs {
        None => (0..n).map(unit).collect(),
        Some(with_diagonal) => {
            let mut out = Vec::new();
            for i in 0..n {
                let start = if with_diagonal { i } else { i + 1 };
                for j in start..n {
                    let mut w = unit(i);
                    w[j] += 1;
                    out.push(w);
                }
            }
            out
        }
    }
}

/// Weight multiset of the `size`-element sub(multi)sets of `items`:
/// the standard monomial basis of `Sym^size` (`repeat`) or `∧^size`.
fn choose_weights(items: &[Vec<usize>], size: usize, repeat: bool, n: usize) -> ExponentMap {
    fn go(
        items: &[Vec<usize>],
        start: usize,
        left: usize,
        repeat: bool,
        acc: &mut Vec<usize>,
        out: &mut BTreeMap<Vec<usize>, u64>,
    ) {
        if left == 0 {
            *out.entry(acc.clone()).or_default() += 1;
            return;
        }
        for k in start..items.len() {
            for (a, w) in acc.iter_mut().zip(&items[k]) {
                *a += w;
            }
            go(
                items,
                if repeat { k } else { k + 1 },
                left - 1,
                repeat,
                acc,
                out,
            );
            for (a, w) in acc.iter_mut().zip(&items[k]) {
                *a -= w;
            }
        }
    }
    let mut counts = BTreeMap::new();
    go(items, 0, size, repeat, &mut vec![0; n], &mut counts);
    counts
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect()
}

/// `ch_W(x_1,…,x_n) = Σ_μ dim W(μ) x^μ`, computed by enumerating the
/// standard weight basis of `W`.
pub fn character(spec: &Construction, n: usize) -> SymPoly {
    let (items, size, repeat) = match spec {
        Construction::SymPower(d) => (basis_weights(n, None), *d, true),
        Construction::ExtPower(d) => (basis_weights(n, None), *d, false),
        Construction::SymOfExt2(l) => (basis_weights(n, Some(false)), *l, true),
        Construction::SymOfSym2(l) => (basis_weights(n, Some(true)), *l, true),
        Construction::ExtOfExt2(l) => (basis_weights(n, Some(false)), *l, false),
        Construction::ExtOfSym2(l) => (basis_weights(n, Some(true)), *l, false),
        Construction::Tensor(fs) => {
            return fs.iter().fold(SymPoly::one(n), |acc, f| {
                acc.mul(&character(f, n)).expect("same variable count")
            })
        }
    };
    let full = choose_weights(&items, size, repeat, n);
    SymPoly::from_exponent_map(n, &full)
        .expect("the weight multiset of a GL_n-representation is symmetric")
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::SymPower(d) => write!(f, "sym({d})"),
            Construction::ExtPower(d) => write!(f, "ext({d})"),
            Construction::SymOfExt2(l) => write!(f, "sym_ext2({l})"),
            Construction::SymOfSym2(l) => write!(f, "sym_sym2({l})"),
            Construction::ExtOfExt2(l) => write!(f, "ext_ext2({l})"),
            Construction::ExtOfSym2(l) => write!(f, "ext_sym2({l})"),
            Construction::Tensor(fs) if fs.is_empty() => write!(f, "one"),
            Construction::Tensor(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

/// Parses products like `sym(2) * sym_ext2(1)`; `⊗` is accepted in place
/// of `*`, and `one` is the trivial representation.
impl FromStr for Construction {
    type Err = SymCharError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymCharError::Parse(s.to_string());
        let factors = s
            .split(['*', '⊗'])
            .map(|tok| {
                let tok = tok.trim();
                if tok == "one" {
                    return Ok(None);
                }
                let (name, rest) = tok.split_once('(').ok_or_else(bad)?;
                let arg: usize = rest
                    .strip_suffix(')')
                    .ok_or_else(bad)?
                    .trim()
                    .parse()
                    .map_err(|_| bad())?;
                let atom = match name.trim() {
                    "sym" => Construction::SymPower(arg),
                    "ext" => Construction::ExtPower(arg),
                    "sym_ext2" => Construction::SymOfExt2(arg),
                    "sym_sym2" => Construction::SymOfSym2(arg),
                    "ext_ext2" => Construction::ExtOfExt2(arg),
                    "ext_sym2" => Construction::ExtOfSym2(arg),
                    _ => return Err(bad()),
                };
                Ok(Some(atom))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut factors: Vec<Construction> = factors.into_iter().flatten().collect();
        if factors.len() == 1 {
            Ok(factors.pop().expect("one factor"))
        } else {
            Ok(Construction::Tensor(factors))
        }
    }
}
