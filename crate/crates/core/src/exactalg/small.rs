use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::GaussianRational;

/// Arithmetic used by the contraction kernels. `None` means the value left
/// the representable range and the caller must redo the work exactly.
pub(crate) trait Accumulate: Clone + Sized {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn times(&self, rhs: &Self) -> Option<Self>;
    fn add_to(&mut self, rhs: &Self) -> Option<()>;
}

impl Accumulate for GaussianRational {
    fn one() -> Self {
        GaussianRational::one()
    }

    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }

    fn times(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }

    fn add_to(&mut self, rhs: &Self) -> Option<()> {
        *self += rhs;
        Some(())
    }
}

/// A Gaussian integer with machine-word parts and checked arithmetic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct SmallGaussInt {
    re: i128,
    im: i128,
}

impl SmallGaussInt {
    pub(crate) const ZERO: SmallGaussInt = SmallGaussInt { re: 0, im: 0 };

    /// `None` unless `x` is a Gaussian integer with parts fitting in `i64`.
    pub(crate) fn from_scalar(x: &GaussianRational) -> Option<Self> {
        let part = |r: &num_rational::BigRational| {
            r.is_integer().then(|| r.numer().to_i64()).flatten().map(i128::from)
        };
        Some(SmallGaussInt {
            re: part(x.re())?,
            im: part(x.im())?,
        })
    }

    pub(crate) fn to_scalar(self) -> GaussianRational {
        GaussianRational::new(
            num_rational::BigRational::from_integer(BigInt::from(self.re)),
            num_rational::BigRational::from_integer(BigInt::from(self.im)),
        )
    }
}

impl Accumulate for SmallGaussInt {
    fn one() -> Self {
        SmallGaussInt { re: 1, im: 0 }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn times(&self, rhs: &Self) -> Option<Self> {
        Some(SmallGaussInt {
            re: self.re.checked_mul(rhs.re)?.checked_sub(self.im.checked_mul(rhs.im)?)?,
            im: self.re.checked_mul(rhs.im)?.checked_add(self.im.checked_mul(rhs.re)?)?,
        })
    }

    fn add_to(&mut self, rhs: &Self) -> Option<()> {
        self.re = self.re.checked_add(rhs.re)?;
        self.im = self.im.checked_add(rhs.im)?;
        Some(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_products() {
        let a = GaussianRational::gaussian_int(3, -2);
        let b = GaussianRational::gaussian_int(-1, 5);
        let (sa, sb) = (SmallGaussInt::from_scalar(&a).unwrap(), SmallGaussInt::from_scalar(&b).unwrap());
        assert_eq!(sa.times(&sb).unwrap().to_scalar(), &a * &b);
        let mut s = sa;
        s.add_to(&sb).unwrap();
        assert_eq!(s.to_scalar(), &a + &b);
    }

    #[test]
    fn rejects_fractions_and_overflow() {
        assert!(SmallGaussInt::from_scalar(&"1/2".parse().unwrap()).is_none());
        let big = SmallGaussInt { re: i128::MAX / 2, im: 0 };
        assert!(big.times(&big).is_none());
    }
}
