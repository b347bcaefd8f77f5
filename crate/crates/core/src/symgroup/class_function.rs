use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::SymGroupError;
use crate::partitions::{partitions_of, Partition};

/// An integer-valued class function on `S_n`, keyed by cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ClassFunctionJson", into = "ClassFunctionJson")]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, i64>,
}

#[derive(Serialize, Deserialize)]
struct ClassFunctionJson {
    n: usize,
    values: Vec<ClassValue>,
}

#[derive(Serialize, Deserialize)]
struct ClassValue {
    #[serde(rename = "type")]
    cycle_type: Partition,
    value: i64,
}

impl TryFrom<ClassFunctionJson> for ClassFunction {
    type Error = SymGroupError;

    fn try_from(json: ClassFunctionJson) -> Result<Self, Self::Error> {
        let values: BTreeMap<Partition, i64> = json
            .values
            .into_iter()
            .map(|v| (v.cycle_type, v.value))
            .collect();
        let expected = partitions_of(json.n, None);
        if values.len() != expected.len() || expected.iter().any(|rho| !values.contains_key(rho)) {
            return Err(SymGroupError::IncompleteClassFunction { n: json.n });
        }
        Ok(ClassFunction { n: json.n, values })
    }
}

impl From<ClassFunction> for ClassFunctionJson {
    fn from(f: ClassFunction) -> Self {
        let values = f
            .values
            .into_iter()
            .rev()
            .map(|(cycle_type, value)| ClassValue { cycle_type, value })
            .collect();
        ClassFunctionJson { n: f.n, values }
    }
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> i64) -> Self {
        let values = partitions_of(n, None).into_iter().map(|rho| {
            let v = f(&rho);
            (rho, v)
        });
        ClassFunction {
            n,
            values: values.collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        ClassFunction::from_fn(n, |_| 1)
    }

    pub fn sign(n: usize) -> Self {
        ClassFunction::from_fn(n, |rho| {
            if (rho.size() - rho.len()) % 2 == 0 {
                1
            } else {
                -1
            }
        })
    }

    /// The regular character: `n!` at the identity, `0` elsewhere.
    pub fn regular(n: usize) -> Self {
        let order = factorial(n) as i64;
        ClassFunction::from_fn(n, |rho| if rho.len() == n { order } else { 0 })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Value at cycle type `rho`; `None` unless `rho ⊢ n`.
    pub fn value(&self, rho: &Partition) -> Option<i64> {
        self.values.get(rho).copied()
    }

    /// `(cycle type, value)` in descending lexicographic order of type.
    pub fn values(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.values.iter().rev().map(|(k, &v)| (k, v))
    }

    /// Value at the identity, i.e. the dimension of a representation.
    pub fn at_identity(&self) -> i64 {
        self.values
            .get(&Partition::from_weight(&vec![1; self.n]))
            .copied()
            .unwrap_or(0)
    }

    /// Pointwise product (the character of a tensor product).
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction, SymGroupError> {
        self.zip(other, |a, b| a * b)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, SymGroupError> {
        self.zip(other, |a, b| a + b)
    }

    fn zip(
        &self,
        other: &ClassFunction,
        op: impl Fn(i64, i64) -> i64,
    ) -> Result<ClassFunction, SymGroupError> {
        check_degrees(self.n, other.n)?;
        let values = self
            .values
            .iter()
            .map(|(rho, &a)| (rho.clone(), op(a, other.values[rho])))
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }
}

fn check_degrees(left: usize, right: usize) -> Result<(), SymGroupError> {
    if left != right {
        return Err(SymGroupError::DegreeMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_ρ = Π_r r^{m_r} m_r!`, the order of the centralizer of an element
/// of cycle type `ρ`.
pub fn z(rho: &Partition) -> u64 {
    rho.multiplicities()
        .into_iter()
        .map(|(r, m)| (r as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Number of permutations of cycle type `ρ`: `n!/z_ρ`.
pub fn class_size(rho: &Partition) -> u64 {
    factorial(rho.size()) / z(rho)
}

/// `⟨f, g⟩ = (1/n!) Σ_ρ |C_ρ| f(ρ) g(ρ)`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational, SymGroupError> {
    check_degrees(f.n, g.n)?;
    let total: BigInt = f
        .values
        .iter()
        .map(|(rho, &a)| BigInt::from(class_size(rho)) * a * g.values[rho])
        .sum();
    Ok(BigRational::new(total, BigInt::from(factorial(f.n))))
}

/// Multiplicities `⟨f, χ^λ⟩` of the irreducible characters in `f`;
/// only nonzero multiplicities are listed.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Partition, i64>, SymGroupError> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(f.n, None) {
        let m = inner_product(f, &mn_character(&lambda))?;
        if !m.is_integer() {
            return Err(SymGroupError::NonIntegralMultiplicity {
                lambda,
                value: m.to_string(),
            });
        }
        let m = m.to_integer().to_i64().expect("multiplicity fits in i64");
        if !m.is_zero() {
            out.insert(lambda, m);
        }
    }
    Ok(out)
}

/// The irreducible character `χ^λ` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition) -> ClassFunction {
    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let mut memo = HashMap::new();
    ClassFunction::from_fn(lambda.size(), |rho| mn_value(&beta, rho.parts(), &mut memo))
}

/// `χ` of the shape with beta-set `beta` at cycle lengths `rho`. Removing
/// a rim hook of length `r` moves one bead from `b` to the free position
/// `b − r`, with sign `(−1)` to the number of beads jumped over.
fn mn_value(
    beta: &[usize],
    rho: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&c| b - r < c && c < b).count();
        let mut moved = beta.to_vec();
        moved[idx] = b - r;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&moved, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// `(λ, χ^λ)` for every `λ ⊢ n`, in descending lexicographic order.
pub fn character_table(n: usize) -> Vec<(Partition, ClassFunction)> {
    partitions_of(n, None)
        .into_iter()
        .map(|lambda| {
            let chi = mn_character(&lambda);
            (lambda, chi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Permutation;
    use crate::tableaux::standard_count;
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p(&[1, 1, 1])), 1);
        assert_eq!(class_size(&p(&[2, 1])), 3);
        assert_eq!(z(&p(&[2, 2])), 8);
        for n in 0..=6 {
            let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
            for g in Permutation::all(n) {
                *counts.entry(g.cycle_type()).or_default() += 1;
            }
            for (rho, c) in counts {
                assert_eq!(class_size(&rho), c);
            }
        }
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&p(&[4])), ClassFunction::trivial(4));
        assert_eq!(mn_character(&p(&[1, 1])), ClassFunction::sign(2));
        let chi = mn_character(&p(&[2, 1]));
        assert_eq!(chi.value(&p(&[1, 1, 1])), Some(2));
        assert_eq!(chi.value(&p(&[2, 1])), Some(0));
        assert_eq!(chi.value(&p(&[3])), Some(-1));
        assert_eq!(inner_product(&chi, &chi).unwrap(), BigRational::one());
        assert_eq!(mn_character(&Partition::empty()), ClassFunction::trivial(0));
    }

    /// Independent oracle: `χ^λ(id) = f^λ` and `Σ (f^λ)² = n!`.
    #[test]
    fn degrees_match_standard_counts() {
        for n in 0..=7 {
            let mut sum = 0;
            for (lambda, chi) in character_table(n) {
                assert_eq!(chi.at_identity() as u64, standard_count(&lambda));
                sum += standard_count(&lambda).pow(2);
            }
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn orthonormality() {
        for n in 0..=6 {
            let table = character_table(n);
            for (l1, c1) in &table {
                for (l2, c2) in &table {
                    let expected = if l1 == l2 {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(inner_product(c1, c2).unwrap(), expected, "{l1} {l2}");
                }
            }
        }
    }

    #[test]
    fn sign_twist_conjugates() {
        for n in 1..=6 {
            for (lambda, chi) in character_table(n) {
                let twisted = chi.mul(&ClassFunction::sign(n)).unwrap();
                assert_eq!(twisted, mn_character(&lambda.conjugate()));
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let regular = decompose(&ClassFunction::regular(3)).unwrap();
        let expected: BTreeMap<Partition, i64> =
            [(p(&[3]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 1)]
                .into_iter()
                .collect();
        assert_eq!(regular, expected);
        let chi = mn_character(&p(&[3, 1]));
        assert_eq!(
            decompose(&chi).unwrap(),
            [(p(&[3, 1]), 1)].into_iter().collect()
        );
        let odd = ClassFunction::from_fn(2, |rho| if rho.len() == 2 { 1 } else { 0 });
        assert!(matches!(
            decompose(&odd),
            Err(SymGroupError::NonIntegralMultiplicity { .. })
        ));
        assert!(matches!(
            ClassFunction::trivial(2).mul(&ClassFunction::trivial(3)),
            Err(SymGroupError::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let chi = mn_character(&p(&[1, 1]));
        let json = serde_json::to_string(&chi).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"values":[{"type":[2],"value":-1},{"type":[1,1],"value":1}]}"#
        );
        assert_eq!(serde_json::from_str::<ClassFunction>(&json).unwrap(), chi);
        assert!(serde_json::from_str::<ClassFunction>(r#"{"n":2,"values":[]}"#).is_err());
    }
}
