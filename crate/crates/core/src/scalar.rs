//! Coefficient traits for [`Poly`](crate::Poly).
//!
//! Ring operations only need [`Scalar`]; interpolation and anything that
//! divides needs [`Field`]. The polynomial families themselves are always
//! built over [`Rational`](crate::Rational).

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::{BigInt, Sign};
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num, Signed, Zero};

pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every i64 is representable")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive
{
}

/// Scalars whose `/` is exact field division.
pub trait Field: Scalar {}

impl Field for BigRational {}
impl Field for Rational64 {}
impl Field for f64 {}
impl Field for f32 {}

/// Square roots that either are exact or do not exist.
pub trait ExactSqrt: Sized {
    fn exact_sqrt(&self) -> Option<Self>;
}

fn bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl ExactSqrt for BigInt {
    fn exact_sqrt(&self) -> Option<Self> {
        bigint_sqrt(self)
    }
}

impl ExactSqrt for BigRational {
    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = bigint_sqrt(self.numer())?;
        let d = bigint_sqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }
}

/// Returns the integer behind `q`, if it is one.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `(-1)^k` as a scalar.
pub fn sign<T: Scalar>(k: i64) -> T {
    if k.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;

    #[test]
    fn rational_sqrt() {
        assert_eq!(rational(9, 4).exact_sqrt(), Some(rational(3, 2)));
        assert_eq!(rational(2, 1).exact_sqrt(), None);
        assert_eq!(rational(-4, 1).exact_sqrt(), None);
        assert_eq!(rational(1, 8).exact_sqrt(), None);
    }

    #[test]
    fn sign_alternates() {
        assert_eq!(sign::<i64>(3), -1);
        assert_eq!(sign::<i64>(-2), 1);
        assert!(sign::<BigRational>(0).is_one());
    }
}
