//! Scalar traits. Polynomial arithmetic only needs a commutative ring;
//! elimination needs division.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

pub trait Coefficient:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;
}

pub trait Field: Coefficient + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Coefficient for Ratio<T>
where
    T: Integer + Clone + Signed + FromPrimitive + Debug + Send + Sync,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for coefficient type"))
    }
}

impl<T> Field for Ratio<T> where T: Integer + Clone + Signed + FromPrimitive + Debug + Send + Sync {}

impl Coefficient for num_bigint::BigInt {
    fn from_i64(v: i64) -> Self {
        num_bigint::BigInt::from(v)
    }
}

impl Coefficient for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

/// `num / den` as an exact rational.
pub fn rational(num: i64, den: i64) -> crate::Rational {
    crate::Rational::new(num.into(), den.into())
}

/// An integer as an exact rational.
pub fn int(n: i64) -> crate::Rational {
    crate::Rational::from_integer(n.into())
}
