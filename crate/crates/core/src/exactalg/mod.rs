//! Exact scalars over the Gaussian rationals and dense exact linear algebra.

mod matrix;
mod scalar;
mod small;

pub use matrix::ExactMatrix;
pub use scalar::GaussianRational;
pub(crate) use small::{Accumulate, SmallGaussInt};
