//! Exact integer scalars.
//!
//! Everything in this crate is exact. Set elements and exponents are
//! unsigned ([`Natural`]), lattice and equation entries are signed ([`Int`]).
//! Both traits are implemented for the primitive widths and for the
//! arbitrary-precision types from `num-bigint`. Fixed widths are a fast path:
//! arithmetic that leaves their range panics instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{
    CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive, Unsigned,
};

/// Nonnegative exact integer.
pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + FromStr
    + Send
    + Sync
    + 'static
    + Unsigned
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn of_u64(value: u64) -> Self {
        <Self as FromPrimitive>::from_u64(value).expect("u64 value out of range for scalar type")
    }

    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other).expect("natural overflow")
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("natural overflow")
    }
}

/// Signed exact integer.
pub trait Int:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn of_i64(value: i64) -> Self {
        <Self as FromPrimitive>::from_i64(value).expect("i64 value out of range for scalar type")
    }

    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other).expect("integer overflow")
    }

    fn sub_exact(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("integer overflow")
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("integer overflow")
    }
}

macro_rules! natural_prim {
    ($($t:ty),*) => {$(
        impl Natural for $t {
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.to_string().parse().ok().filter(|_| value.sign() != Sign::Minus)
            }
        }
    )*};
}

macro_rules! int_prim {
    ($($t:ty),*) => {$(
        impl Int for $t {
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.try_into().ok()
            }
        }
    )*};
}

natural_prim!(u8, u16, u32, u64, u128, usize);
int_prim!(i8, i16, i32, i64, i128, isize);

impl Natural for BigUint {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(self.clone())
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_biguint()
    }
}

impl Int for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
}

/// Converts between any two exact scalar types, `None` when out of range.
pub fn nat_to_int<N: Natural, Z: Int>(value: &N) -> Option<Z> {
    Z::from_bigint(&value.to_bigint())
}

pub fn int_to_nat<Z: Int, N: Natural>(value: &Z) -> Option<N> {
    N::from_bigint(&value.to_bigint())
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversions_respect_range() {
        assert_eq!(
            <u8 as Natural>::from_bigint(&BigInt::from(255)),
            Some(255u8)
        );
        assert_eq!(<u8 as Natural>::from_bigint(&BigInt::from(256)), None);
        assert_eq!(<u32 as Natural>::from_bigint(&BigInt::from(-1)), None);
        assert_eq!(<i8 as Int>::from_bigint(&BigInt::from(-128)), Some(-128i8));
        assert_eq!(nat_to_int::<BigUint, i64>(&BigUint::from(7u8)), Some(7i64));
        assert_eq!(int_to_nat::<i64, u32>(&-3), None);
    }

    #[test]
    #[should_panic(expected = "natural overflow")]
    fn fixed_width_overflow_panics() {
        let _ = 200u8.add_exact(&100u8);
    }
}
