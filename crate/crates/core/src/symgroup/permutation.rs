use std::fmt;

use serde::{Deserialize, Serialize};

use super::SymGroupError;
use crate::partitions::Partition;

/// A permutation of `{1,…,n}` in one-line notation. Stored 0-based;
/// every public index and image is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From the one-line array `g(1), …, g(n)`.
    pub fn new(images: Vec<usize>) -> Result<Self, SymGroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(SymGroupError::NotAPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images.into_iter().map(|x| x - 1).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Product of the given disjoint cycles (1-based) in `S_n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, SymGroupError> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || touched[x - 1] {
                    return Err(SymGroupError::NotAPermutation(cycle.clone()));
                }
                touched[x - 1] = true;
                images[x - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// The canonical element of cycle type `rho`: cycles on consecutive
    /// runs `(1 … ρ₁)(ρ₁+1 … ρ₁+ρ₂)…`.
    pub fn of_cycle_type(rho: &Partition) -> Self {
        let mut images = Vec::with_capacity(rho.size());
        for &r in rho.parts() {
            let start = images.len();
            images.extend((1..r).map(|t| start + t));
            images.push(start);
        }
        Permutation(images)
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `g(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub(crate) fn at(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `g⁻¹ ∘ self ∘ g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    /// Disjoint cycles, each starting at its least element, ordered by
    /// that element; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        Partition::from_weight(&lengths)
    }

    pub fn sign(&self) -> i64 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &x)| i == x).count()
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x] == i)
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation(current.clone())];
        loop {
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..n)
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .expect("pivot");
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Permutation(current.clone()));
        }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = SymGroupError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(g: Permutation) -> Self {
        g.one_line()
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    #[test]
    fn construction_and_validation() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![2, 2, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        let g = Permutation::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(g.one_line(), vec![3, 4, 1, 2]);
        assert_eq!(g.to_string(), "(1 3)(2 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn group_laws() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let e = Permutation::identity(4);
        for g in &all {
            assert_eq!(g.compose(&g.inverse()), e);
            for h in all.iter().step_by(5) {
                assert_eq!(g.compose(h).sign(), g.sign() * h.sign());
                assert_eq!(g.conjugate_by(h).cycle_type(), g.cycle_type());
            }
        }
        let g = Permutation::new(vec![2, 3, 1]).unwrap();
        let h = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(g.compose(&h).one_line(), vec![3, 2, 1]);
    }

    #[test]
    fn canonical_representatives() {
        for n in 0..=6 {
            for rho in partitions_of(n, None) {
                assert_eq!(Permutation::of_cycle_type(&rho).cycle_type(), rho);
            }
        }
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(Permutation::of_cycle_type(&p).one_line(), vec![2, 3, 1, 4]);
    }

    #[test]
    fn json_is_one_based() {
        let g = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "[2,1]");
        assert_eq!(serde_json::from_str::<Permutation>("[2,1]").unwrap(), g);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
