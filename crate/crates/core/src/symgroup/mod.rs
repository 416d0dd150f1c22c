//! Partitions, hook lengths, characters of `S_n`, and the orbit-count
//! matrices `M_n(d)`.

mod character;
mod partition;
mod poly;
mod sums;

pub use character::character;
pub use partition::{
    binomial, dimension, factorial, partitions_of, partitions_of_guarded, rectangle_denominator,
    rectangular_dimension, IntegerPartition, DEFAULT_PARTITION_GUARD, RECTANGLE_GUARD,
};
pub use poly::PolynomialInD;
pub use sums::{
    char_sum_lhs, char_sum_lhs_enumerated, char_sum_lhs_guarded, char_sum_rhs, class_size,
    cycle_type_sign, falling_factorial, m_matrix, m_matrix_guarded, m_rank_formula,
    sign_conjugate, signed_orbit_polynomial, signed_orbit_sum, CHAR_SUM_GUARD, M_MATRIX_GUARD,
};
