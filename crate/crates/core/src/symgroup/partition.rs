use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// Largest `n` for which [`partitions_of`] enumerates.
pub const DEFAULT_PARTITION_GUARD: usize = 12;

/// Largest `d·m` accepted by [`rectangular_dimension`].
pub const RECTANGLE_GUARD: usize = 64;

/// An integer partition `λ ⊢ n`: positive parts in nonincreasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not nonincreasing")));
        }
        Ok(IntegerPartition { parts })
    }

    /// Sorts and drops zeros; useful for cycle types.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    /// `(m, .., m)` with `rows` parts.
    pub fn rectangle(rows: usize, m: usize) -> Self {
        if m == 0 {
            return Self::empty();
        }
        IntegerPartition {
            parts: vec![m; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Cells `(i, j)` of the Young shape, 1-based: row `i`, column `j`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// The transpose shape.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        IntegerPartition {
            parts: (1..=width)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|(i, j)| (self.parts[i - 1] - j) + (conj.parts[j - 1] - i) + 1)
            .collect()
    }

    /// Multiplicity `m_j` of each part size `j = 1..=n` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.size() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(3,2,1)`; the empty partition prints as `()`.
impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Result<Vec<IntegerPartition>> {
    partitions_of_guarded(n, DEFAULT_PARTITION_GUARD)
}

pub fn partitions_of_guarded(n: usize, guard: usize) -> Result<Vec<IntegerPartition>> {
    if n > guard {
        return Err(Error::guard("partition size", guard, n));
    }
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `f^λ`, the dimension of the irreducible representation `r_λ`, by the
/// hook-length formula `n! / ∏ hooks`.
pub fn dimension(lambda: &IntegerPartition) -> BigUint {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    let (q, r) = factorial(lambda.size()).div_rem(&hooks);
    debug_assert!(r == BigUint::default());
    q
}

/// The polynomial factor `p(m) = ∏_{i=0}^{rows-1} C(m+i, i)` of the
/// rectangular dimension.
pub fn rectangle_denominator(rows: usize, m: usize) -> BigUint {
    (0..rows).fold(BigUint::one(), |acc, i| acc * binomial(m + i, i))
}

/// `f^λ` for the rectangle with `rows` rows of length `m`, as
/// `(rows·m)! / (m!^rows · p(m))`.
pub fn rectangular_dimension(rows: usize, m: usize) -> Result<BigUint> {
    if rows == 0 || m == 0 {
        return Err(Error::InvalidPartition(format!("rectangle {rows}x{m}")));
    }
    if rows * m > RECTANGLE_GUARD {
        return Err(Error::guard("rectangle size", RECTANGLE_GUARD, rows * m));
    }
    let denom = factorial(m).pow(rows as u32) * rectangle_denominator(rows, m);
    let (q, r) = factorial(rows * m).div_rem(&denom);
    debug_assert!(r == BigUint::default());
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> IntegerPartition {
        IntegerPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0).unwrap(), vec![IntegerPartition::empty()]);
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        assert_eq!(partitions_of(6).unwrap().len(), 11);
        assert_eq!(partitions_of(12).unwrap().len(), 77);
        assert!(partitions_of(13).unwrap_err().is_guard());
    }

    #[test]
    fn reverse_lexicographic_order() {
        let names: Vec<String> = partitions_of(4).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }

    #[test]
    fn validation() {
        assert!(IntegerPartition::new(vec![1, 2]).is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
        assert_eq!(IntegerPartition::from_unsorted(vec![1, 3, 0, 2]), part(&[3, 2, 1]));
    }

    #[test]
    fn hooks_of_staircase() {
        assert_eq!(part(&[3, 2, 1]).hook_lengths(), vec![5, 3, 1, 3, 1, 1]);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&part(&[5])), 1u32.into());
        assert_eq!(dimension(&part(&[1, 1, 1, 1])), 1u32.into());
        assert_eq!(dimension(&part(&[2, 2])), 2u32.into());
        assert_eq!(dimension(&part(&[2, 1])), 2u32.into());
        assert_eq!(dimension(&part(&[3, 2, 1])), 16u32.into());
        assert_eq!(dimension(&IntegerPartition::empty()), 1u32.into());
    }

    #[test]
    fn squares_of_dimensions_sum_to_factorial() {
        for n in 0..=7 {
            let total: BigUint = partitions_of(n)
                .unwrap()
                .iter()
                .map(|l| dimension(l).pow(2))
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn rectangles() {
        for m in 1..=5 {
            assert_eq!(rectangular_dimension(1, m).unwrap(), 1u32.into());
        }
        assert_eq!(rectangular_dimension(2, 2).unwrap(), 2u32.into());
        assert_eq!(rectangular_dimension(3, 2).unwrap(), 5u32.into());
        assert!(rectangular_dimension(0, 2).is_err());
        assert!(rectangular_dimension(9, 9).unwrap_err().is_guard());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10u32.into());
        assert_eq!(binomial(2, 5), 0u32.into());
        assert_eq!(binomial(0, 0), 1u32.into());
    }
}
