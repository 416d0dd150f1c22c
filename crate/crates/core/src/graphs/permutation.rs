use std::fmt;
use std::ops::Mul;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// A permutation of `{0, .., m-1}` stored as its image sequence.
///
/// Products follow the left-to-right convention: `(ρσ)(i) = σ(ρ(i))`,
/// i.e. the left factor acts first. This is the order in which permutation
/// fragments compose when drawn left to right, so `r(ρ)·r(σ) = r(ρσ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From 0-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as written in cycle-free notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&x| {
                x.checked_sub(1)
                    .ok_or_else(|| Error::InvalidPermutation(format!("{images:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shifted)
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        if a >= m || b >= m {
            return Err(Error::InvalidPermutation(format!("({a} {b}) in S_{m}")));
        }
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    /// The cycle `0 -> 1 -> .. -> m-1 -> 0`.
    pub fn long_cycle(m: usize) -> Self {
        Permutation {
            images: (0..m).map(|i| (i + 1) % m.max(1)).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..m).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    /// All of `S_m` in lexicographic order of image sequences.
    pub fn all(m: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..m).collect()),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `ρσ` with `ρ = self`: first `self`, then `rhs`.
    pub fn product(&self, rhs: &Permutation) -> Result<Self> {
        if self.degree() != rhs.degree() {
            return Err(Error::ArityMismatch {
                left: self.degree(),
                right: rhs.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&x| rhs.images[x]).collect(),
        })
    }

    /// Cycles, each listed from its smallest element, sorted by that element.
    /// Fixed points are cycles of length one.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Number of orbits, fixed points included.
    pub fn orbit_count(&self) -> usize {
        self.cycles().len()
    }

    /// `(-1)^(m - orbits)`.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.orbit_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths in nonincreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::product`] to get an error instead.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.product(rhs).expect("permutations of equal degree")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One-line notation with 1-based images, e.g. `[2,1,3]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Iterator returned by [`Permutation::all`].
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-lexicographic-permutation step
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = Permutation::all(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(Permutation::all(5).count(), 120);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn orbits_and_signs() {
        let id = Permutation::identity(4);
        assert_eq!((id.orbit_count(), id.sign()), (4, 1));
        let t = Permutation::transposition(2, 0, 1).unwrap();
        assert_eq!((t.orbit_count(), t.sign()), (1, -1));
        let c5 = Permutation::long_cycle(5);
        assert_eq!((c5.orbit_count(), c5.sign()), (1, 1));
    }

    #[test]
    fn sign_is_multiplicative() {
        for a in Permutation::all(4) {
            for b in Permutation::all(4) {
                assert_eq!((&a * &b).sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn product_acts_left_first() {
        let rho = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let sigma = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let p = &rho * &sigma;
        for i in 0..3 {
            assert_eq!(p.apply(i), sigma.apply(rho.apply(i)));
        }
        assert!((&rho * &rho.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn cycle_type_sorted() {
        let p = Permutation::from_one_based(&[2, 1, 4, 5, 3, 6]).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
    }
}
