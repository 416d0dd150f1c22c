//! Sums over `S_n` weighted by `d^{o(π)}` and the matrices `M_n(d)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, GaussianRational};
use crate::graphs::Permutation;

use super::{character, dimension, factorial, partitions_of_guarded, IntegerPartition, PolynomialInD};

/// Largest `n` for which sums over `S_n` are taken.
pub const CHAR_SUM_GUARD: usize = 7;

/// Largest `n` for which `M_n(d)` (an `n! x n!` matrix) is built.
pub const M_MATRIX_GUARD: usize = 5;

fn scalar(n: BigInt) -> GaussianRational {
    GaussianRational::from_real(BigRational::from_integer(n))
}

/// Size of the conjugacy class of cycle type `μ`: `n! / ∏ j^{m_j} m_j!`.
pub fn class_size(mu: &IntegerPartition) -> BigUint {
    let m = mu.multiplicities();
    let centralizer = (1..m.len()).fold(BigUint::from(1u32), |acc, j| {
        acc * BigUint::from(j).pow(m[j] as u32) * factorial(m[j])
    });
    factorial(mu.size()) / centralizer
}

/// `sgn` of any permutation with cycle type `μ`.
pub fn cycle_type_sign(mu: &IntegerPartition) -> i64 {
    if (mu.size() - mu.height()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Left side of the character identity, `Σ_{π ∈ S_n} χ_λ(π) d^{o(π)}`,
/// summed per conjugacy class.
pub fn char_sum_lhs(lambda: &IntegerPartition) -> Result<PolynomialInD> {
    char_sum_lhs_guarded(lambda, CHAR_SUM_GUARD)
}

pub fn char_sum_lhs_guarded(lambda: &IntegerPartition, guard: usize) -> Result<PolynomialInD> {
    let n = lambda.size();
    if n > guard {
        return Err(Error::guard("symmetric group degree", guard, n));
    }
    let mut coefficients = vec![BigInt::default(); n + 1];
    for mu in partitions_of_guarded(n, guard)? {
        let chi = character(lambda, &mu)?;
        coefficients[mu.height()] += BigInt::from(class_size(&mu)) * chi;
    }
    Ok(PolynomialInD::new(coefficients.into_iter().map(scalar).collect()))
}

/// Same sum as [`char_sum_lhs`], but visiting every permutation.
pub fn char_sum_lhs_enumerated(lambda: &IntegerPartition) -> Result<PolynomialInD> {
    let n = lambda.size();
    if n > CHAR_SUM_GUARD {
        return Err(Error::guard("symmetric group degree", CHAR_SUM_GUARD, n));
    }
    let mut coefficients = vec![0i64; n + 1];
    for pi in Permutation::all(n) {
        let mu = IntegerPartition::from_unsorted(pi.cycle_type());
        coefficients[pi.orbit_count()] += character(lambda, &mu)?;
    }
    Ok(PolynomialInD::from_ints(&coefficients))
}

/// Right side: `f^λ ∏_{(i,j) ∈ Y_λ} (d + j - i)`.
pub fn char_sum_rhs(lambda: &IntegerPartition) -> PolynomialInD {
    let f = PolynomialInD::constant(scalar(BigInt::from(dimension(lambda))));
    lambda.cells().fold(f, |acc, (i, j)| {
        &acc * &PolynomialInD::linear(GaussianRational::from_int(j as i64 - i as i64))
    })
}

/// `M_n(d)` with rows and columns indexed by `S_n` in lexicographic order:
/// entry `(ρ, σ)` is `d^{o(ρσ⁻¹)}`.
pub fn m_matrix(n: usize, d: &GaussianRational) -> Result<ExactMatrix> {
    m_matrix_guarded(n, d, M_MATRIX_GUARD)
}

pub fn m_matrix_guarded(n: usize, d: &GaussianRational, guard: usize) -> Result<ExactMatrix> {
    if n > guard {
        return Err(Error::guard("permutation degree", guard, n));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let inverses: Vec<Permutation> = perms.iter().map(Permutation::inverse).collect();
    let powers: Vec<GaussianRational> = (0..=n).map(|j| d.pow_u(j as u64)).collect();
    Ok(ExactMatrix::from_fn(perms.len(), perms.len(), |r, s| {
        powers[(&perms[r] * &inverses[s]).orbit_count()].clone()
    }))
}

/// `(-1)^n Δ M Δ` where `Δ` is the diagonal of permutation signs in the
/// same order as [`m_matrix`]. Applied to `M_n(d)` this gives `M_n(-d)`.
pub fn sign_conjugate(n: usize, m: &ExactMatrix) -> Result<ExactMatrix> {
    let signs: Vec<i64> = Permutation::all(n).map(|p| p.sign()).collect();
    if m.rows() != signs.len() || m.cols() != signs.len() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix is not indexed by S_{n}",
            m.rows(),
            m.cols()
        )));
    }
    let overall = if n.is_multiple_of(2) { 1 } else { -1 };
    Ok(ExactMatrix::from_fn(m.rows(), m.cols(), |r, s| {
        let sign = overall * signs[r] * signs[s];
        if sign == 1 {
            m.get(r, s).clone()
        } else {
            -m.get(r, s)
        }
    }))
}

/// Predicted rank of `M_n(d)` for real rational `d`: `n!` unless `d` is an
/// integer, in which case `Σ (f^λ)²` over `λ ⊢ n` with at most `|d|` rows.
pub fn m_rank_formula(n: usize, d: &GaussianRational) -> Result<BigUint> {
    if !d.is_real() {
        return Err(Error::NonRealParameter(d.to_string()));
    }
    match d.as_integer() {
        None => Ok(factorial(n)),
        Some(d) => {
            let bound = d.abs().to_usize().unwrap_or(usize::MAX);
            Ok(partitions_of_guarded(n, n.max(super::DEFAULT_PARTITION_GUARD))?
                .iter()
                .filter(|l| l.height() <= bound)
                .map(|l| dimension(l).pow(2))
                .sum())
        }
    }
}

/// `Σ_{π ∈ S_k} sgn(π) d^{o(π)}` as a polynomial in `d`.
pub fn signed_orbit_polynomial(k: usize) -> Result<PolynomialInD> {
    let mut coefficients = vec![BigInt::default(); k + 1];
    for mu in partitions_of_guarded(k, super::DEFAULT_PARTITION_GUARD)? {
        coefficients[mu.height()] += BigInt::from(class_size(&mu)) * cycle_type_sign(&mu);
    }
    Ok(PolynomialInD::new(coefficients.into_iter().map(scalar).collect()))
}

/// `Σ_{π ∈ S_k} sgn(π) d^{o(π)}` evaluated at `d`.
pub fn signed_orbit_sum(k: usize, d: &GaussianRational) -> Result<GaussianRational> {
    Ok(signed_orbit_polynomial(k)?.eval(d))
}

/// `d(d-1)···(d-k+1)`.
pub fn falling_factorial(k: usize) -> PolynomialInD {
    (0..k).fold(PolynomialInD::constant(GaussianRational::one()), |acc, j| {
        &acc * &PolynomialInD::linear(GaussianRational::from_int(-(j as i64)))
    })
}
