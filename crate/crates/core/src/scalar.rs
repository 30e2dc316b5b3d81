//! Scalar abstractions shared by the counting kernels and the series code.
//!
//! Walk counters only need a commutative monoid with a unit, so they are
//! generic over [`Count`] (`u64` for quick checks, [`BigUint`] when the numbers
//! get large). Power series need a ring, and the Bessel coefficients need
//! exact quotients of integers, which is what [`Field`] adds.

use std::fmt::Debug;
use std::ops::{AddAssign, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Values that can accumulate walk counts.
pub trait Count: Clone + Debug + PartialEq + Zero + One + for<'a> AddAssign<&'a Self> {}

impl<T> Count for T where T: Clone + Debug + PartialEq + Zero + One + for<'a> AddAssign<&'a T> {}

/// A commutative ring with unit.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// A ring in which integer ratios can be represented.
pub trait Field: Ring + Div<Output = Self> {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self;

    fn from_integer(value: &BigInt) -> Self {
        Self::from_ratio(value, &BigInt::one())
    }
}

impl Field for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
    }
}

impl Field for f64 {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        // Large factorials overflow f64 individually, so divide as rationals first.
        BigRational::new(numer.clone(), denom.clone())
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl Field for f32 {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
            .to_f32()
            .unwrap_or(f32::NAN)
    }
}

/// Serialises a big integer as a decimal string, the interchange form for counts.
pub fn serialize_decimal<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Binomial coefficient with the convention `C(n, j) = 0` for `j < 0` or `j > n`.
pub fn binomial(n: i64, j: i64) -> BigInt {
    if n < 0 || j < 0 || j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut acc = BigUint::one();
    for t in 0..j {
        acc *= BigUint::from((n - t) as u64);
        acc /= BigUint::from((t + 1) as u64);
    }
    BigInt::from(acc)
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(-2, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn ratios_in_each_field() {
        let (a, b) = (BigInt::from(3), BigInt::from(4));
        assert_eq!(f64::from_ratio(&a, &b), 0.75);
        assert_eq!(f32::from_ratio(&a, &b), 0.75);
        assert_eq!(
            BigRational::from_ratio(&a, &b),
            BigRational::new(3.into(), 4.into())
        );
    }
}
