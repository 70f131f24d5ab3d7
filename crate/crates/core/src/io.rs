//! JSON helpers for exact integers.
//!
//! Integers that fit in 64 bits are written as JSON numbers; larger values
//! are written as decimal strings. Both forms are accepted on input.

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::num::{Int, Natural};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonNat(pub BigInt);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl JsonNat {
    pub fn from_natural<N: Natural>(n: &N) -> Self {
        Self(n.to_bigint())
    }
    pub fn to_natural<N: Natural>(&self) -> Option<N> {
        N::from_bigint(&self.0)
    }
}

impl JsonInt {
    pub fn from_int<Z: Int>(z: &Z) -> Self {
        Self(z.to_bigint())
    }
    pub fn to_int<Z: Int>(&self) -> Option<Z> {
        Z::from_bigint(&self.0)
    }
}

fn write_big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if let Ok(x) = i64::try_from(v) {
        s.serialize_i64(x)
    } else if let Ok(x) = u64::try_from(v) {
        s.serialize_u64(x)
    } else {
        s.serialize_str(&v.to_string())
    }
}

impl Serialize for JsonNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        write_big(&self.0, s)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        write_big(&self.0, s)
    }
}

struct BigVisitor {
    signed: bool,
}

impl<'de> Visitor<'de> for BigVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.signed {
            f.write_str("an integer or a decimal string")
        } else {
            f.write_str("a nonnegative integer or a decimal string")
        }
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        if !self.signed && v < 0 {
            return Err(E::custom(format!(
                "expected a nonnegative integer, got {v}"
            )));
        }
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        let parsed: BigInt = v
            .trim()
            .parse()
            .map_err(|_| E::custom(format!("not an integer: {v:?}")))?;
        if !self.signed && parsed < BigInt::from(0) {
            return Err(E::custom(format!(
                "expected a nonnegative integer, got {v}"
            )));
        }
        Ok(parsed)
    }
}

impl<'de> Deserialize<'de> for JsonNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(BigVisitor { signed: false }).map(JsonNat)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(BigVisitor { signed: true }).map(JsonInt)
    }
}
