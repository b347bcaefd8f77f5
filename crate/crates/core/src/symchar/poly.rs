use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::SymCharError;
use crate::partitions::Partition;
use crate::tableaux::Weight;

/// A symmetric polynomial in `vars` variables, `Σ_λ c_λ m_λ`, stored in the
/// monomial-symmetric basis keyed by partitions with at most `vars` parts.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    vars: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

/// Full expansion: exponent vector of length `vars` ↦ coefficient.
pub type ExponentMap = BTreeMap<Vec<usize>, BigInt>;

impl SymPoly {
    pub fn zero(vars: usize) -> Self {
        SymPoly {
            vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        SymPoly::monomial(Partition::empty(), vars)
    }

    /// `m_λ`, or zero when `λ` has more than `vars` parts.
    pub fn monomial(lambda: Partition, vars: usize) -> Self {
        let mut f = SymPoly::zero(vars);
        if lambda.len() <= vars {
            f.coeffs.insert(lambda, BigInt::one());
        }
        f
    }

    pub fn from_terms(
        vars: usize,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self, SymCharError> {
        let mut f = SymPoly::zero(vars);
        for (key, c) in terms {
            if key.len() > vars {
                return Err(SymCharError::TooManyParts {
                    key: key.into(),
                    vars,
                });
            }
            f.add_term(key, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, key: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in descending lexicographic order of keys.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    /// Coefficient of `m_λ`.
    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// The lexicographically greatest key with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Partition, &BigInt)> {
        self.coeffs.iter().next_back()
    }

    fn check_vars(&self, other: &SymPoly) -> Result<(), SymCharError> {
        if self.vars != other.vars {
            return Err(SymCharError::VarCountMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly, SymCharError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymPoly) -> Result<SymPoly, SymCharError> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.vars);
        }
        SymPoly {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Product, by convolving the full expansions and keeping the
    /// dominant (weakly decreasing) exponent vectors.
    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly, SymCharError> {
        self.check_vars(other)?;
        let left = self.expand();
        let right = other.expand();
        let mut coeffs: BTreeMap<Partition, BigInt> = BTreeMap::new();
        let mut sum = vec![0usize; self.vars];
        for (a, ca) in &left {
            for (b, cb) in &right {
                for (s, (x, y)) in sum.iter_mut().zip(a.iter().zip(b)) {
                    *s = x + y;
                }
                if sum.windows(2).all(|w| w[0] >= w[1]) {
                    *coeffs.entry(Partition::from_weight(&sum)).or_default() += ca * cb;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SymPoly {
            vars: self.vars,
            coeffs,
        })
    }

    pub fn pow(&self, k: usize) -> SymPoly {
        let mut out = SymPoly::one(self.vars);
        for _ in 0..k {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Every monomial `x^a` with its coefficient.
    pub fn expand(&self) -> ExponentMap {
        let mut out = ExponentMap::new();
        for (key, c) in &self.coeffs {
            let padded = key.padded(self.vars).expect("keys fit the variable count");
            for perm in distinct_permutations(&padded) {
                out.insert(perm, c.clone());
            }
        }
        out
    }

    /// Collects a full expansion back into the monomial basis, checking that
    /// every monomial carries the coefficient of its dominant rearrangement.
    pub fn from_exponent_map(vars: usize, map: &ExponentMap) -> Result<SymPoly, SymCharError> {
        let mut coeffs: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (exp, c) in map {
            if exp.len() != vars {
                return Err(SymCharError::VarCountMismatch {
                    left: vars,
                    right: exp.len(),
                });
            }
            if !c.is_zero() && exp.windows(2).all(|w| w[0] >= w[1]) {
                coeffs.insert(Partition::from_weight(exp), c.clone());
            }
        }
        for (exp, c) in map {
            let key = Partition::from_weight(exp);
            let expected = coeffs.get(&key).cloned().unwrap_or_default();
            if *c != expected {
                return Err(SymCharError::NotSymmetric {
                    monomial: exp.clone(),
                });
            }
        }
        Ok(SymPoly { vars, coeffs })
    }

    /// Coefficient of the monomial `x^μ`.
    pub fn coefficient_of_weight(&self, mu: &Weight) -> Result<BigInt, SymCharError> {
        if mu.len() != self.vars {
            return Err(SymCharError::VarCountMismatch {
                left: self.vars,
                right: mu.len(),
            });
        }
        Ok(self.coeff(&mu.sorted()))
    }

    /// Value at `x = (1, …, 1)`: each `m_λ` contributes the size of the
    /// orbit of `λ` under coordinate permutations.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|(key, c)| c * orbit_size(key, self.vars))
            .sum()
    }
}

/// Number of distinct rearrangements of `λ` padded to `vars` coordinates:
/// `vars! / Π (multiplicity)!`, zeros included.
pub fn orbit_size(lambda: &Partition, vars: usize) -> BigInt {
    let zeros = vars - lambda.len();
    let mut out = factorial(vars);
    for (_, m) in lambda.multiplicities() {
        out /= factorial(m);
    }
    out / factorial(zeros)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Distinct permutations of `v` in lexicographic order.
pub(crate) fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "m{key}")?;
            } else {
                write!(f, "{abs}·m{key}")?;
            }
        }
        Ok(())
    }
}

/// Coefficients go on the wire as JSON integers when they fit in an
/// `i64`, as decimal strings otherwise.
pub(crate) mod bigint_json {
    use super::*;

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Text(s) => s.parse().map_err(D::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    key: Partition,
    #[serde(with = "bigint_json")]
    coeff: BigInt,
}

#[derive(Serialize, Deserialize)]
struct SymPolyRepr {
    vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymPolyRepr {
            vars: self.vars,
            terms: self
                .terms()
                .map(|(key, coeff)| TermRepr {
                    key: key.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SymPolyRepr::deserialize(d)?;
        SymPoly::from_terms(repr.vars, repr.terms.into_iter().map(|t| (t.key, t.coeff)))
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(vars: usize, terms: &[(&[usize], i64)]) -> SymPoly {
        SymPoly::from_terms(vars, terms.iter().map(|(k, c)| (p(k), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let f = poly(2, &[(&[2], 3), (&[1, 1], -1)]);
        assert_eq!(f.add(&SymPoly::zero(2)).unwrap(), f);
        let m1 = SymPoly::monomial(p(&[1]), 2);
        assert_eq!(m1.mul(&m1).unwrap(), poly(2, &[(&[2], 1), (&[1, 1], 2)]));
        assert_eq!(f.sub(&f).unwrap(), SymPoly::zero(2));
        assert_eq!(
            f.add(&SymPoly::zero(3)),
            Err(SymCharError::VarCountMismatch { left: 2, right: 3 })
        );
        assert!(SymPoly::monomial(p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn coefficient_lookup_is_symmetric() {
        let f = poly(3, &[(&[2, 1], 5)]);
        assert_eq!(
            f.coefficient_of_weight(&Weight(vec![0, 1, 2])).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            f.coefficient_of_weight(&Weight(vec![1, 1, 1])).unwrap(),
            BigInt::zero()
        );
        assert!(f.coefficient_of_weight(&Weight(vec![1, 2])).is_err());
    }

    #[test]
    fn evaluation_at_ones() {
        // m_(1) in 3 vars = x1+x2+x3
        assert_eq!(
            SymPoly::monomial(p(&[1]), 3).evaluate_at_ones(),
            BigInt::from(3)
        );
        // m_(2,1) in 3 vars has 6 monomials
        assert_eq!(
            SymPoly::monomial(p(&[2, 1]), 3).evaluate_at_ones(),
            BigInt::from(6)
        );
        assert_eq!(SymPoly::one(0).evaluate_at_ones(), BigInt::one());
    }

    #[test]
    fn exponent_map_round_trip_and_asymmetry() {
        let f = poly(3, &[(&[2, 1], 2), (&[1, 1, 1], -4), (&[], 1)]);
        assert_eq!(SymPoly::from_exponent_map(3, &f.expand()).unwrap(), f);
        let mut bad = f.expand();
        bad.insert(vec![0, 1, 2], BigInt::from(7));
        assert!(matches!(
            SymPoly::from_exponent_map(3, &bad),
            Err(SymCharError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn serialization_shape() {
        let f = poly(2, &[(&[1, 1], 2), (&[2], 1)]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"vars":2,"terms":[{"key":[2],"coeff":1},{"key":[1,1],"coeff":2}]}"#
        );
        assert_eq!(serde_json::from_str::<SymPoly>(&json).unwrap(), f);
        let huge = r#"{"vars":1,"terms":[{"key":[1],"coeff":"123456789012345678901234567890"}]}"#;
        let g: SymPoly = serde_json::from_str(huge).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), huge);
        assert!(
            serde_json::from_str::<SymPoly>(r#"{"vars":1,"terms":[{"key":[1,1],"coeff":1}]}"#)
                .is_err()
        );
    }

    /// Dense multiplication over full exponent maps, no symmetry used.
    fn dense_mul(a: &ExponentMap, b: &ExponentMap) -> ExponentMap {
        let mut out = ExponentMap::new();
        for (x, cx) in a {
            for (y, cy) in b {
                let k: Vec<usize> = x.iter().zip(y).map(|(s, t)| s + t).collect();
                *out.entry(k).or_default() += cx * cy;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn arb_poly(vars: usize, max_deg: usize) -> impl Strategy<Value = SymPoly> {
        let keys: Vec<Partition> = (0..=max_deg)
            .flat_map(|d| crate::partitions::partitions_of(d, Some(vars)))
            .collect();
        proptest::collection::vec((0..keys.len(), -3i64..=3), 0..4).prop_map(move |terms| {
            SymPoly::from_terms(
                vars,
                terms
                    .into_iter()
                    .map(|(i, c)| (keys[i].clone(), BigInt::from(c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn mul_matches_dense_oracle((f, g) in (1usize..=3).prop_flat_map(|n| (arb_poly(n, 3), arb_poly(n, 3)))) {
            let product = f.mul(&g).unwrap();
            prop_assert_eq!(product.expand(), dense_mul(&f.expand(), &g.expand()));
        }

        #[test]
        fn add_is_commutative(f in arb_poly(3, 4), g in arb_poly(3, 4)) {
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        }
    }
}
