use std::collections::HashMap;

use crate::error::{Error, Result};

use super::IntegerPartition;

/// `χ_λ(μ)`: the irreducible character of `S_n` indexed by `λ`, evaluated
/// on any permutation of cycle type `μ`.
///
/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `r`
/// moves one bead `β -> β - r` onto a free position, with sign
/// `(-1)^(beads jumped over)`.
pub fn character(lambda: &IntegerPartition, mu: &IntegerPartition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!(
            "character of {lambda} ⊢ {} on cycle type {mu} ⊢ {}",
            lambda.size(),
            mu.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn(lambda.parts(), mu.parts(), &mut memo))
}

fn mn(parts: &[usize], cycles: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return i64::from(parts.is_empty());
    };
    let key = (parts.to_vec(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }

    let t = parts.len();
    let beads: Vec<usize> = parts.iter().enumerate().map(|(i, &p)| p + (t - 1 - i)).collect();
    let mut total = 0;
    for (idx, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beads.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beads.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (t - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, rest, memo);
    }
    memo.insert(key, total);
    total
}
