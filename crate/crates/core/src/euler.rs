use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact signed Euler characteristic. Serialized as a decimal string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EulerValue(BigInt);

impl EulerValue {
    pub fn zero() -> Self {
        EulerValue(BigInt::zero())
    }

    pub fn one() -> Self {
        EulerValue(BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    /// `base^exp` for a nonnegative base.
    pub fn pow(base: u64, exp: u32) -> Self {
        EulerValue(num_traits::pow(BigInt::from(base), exp as usize))
    }

    /// `(-1)^k`.
    pub fn sign_power(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn checked_exact_div(&self, divisor: i64) -> Option<Self> {
        let d = BigInt::from(divisor);
        if d.is_zero() || !(&self.0 % &d).is_zero() {
            return None;
        }
        Some(EulerValue(&self.0 / d))
    }
}

impl From<BigInt> for EulerValue {
    fn from(v: BigInt) -> Self {
        EulerValue(v)
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for EulerValue {
            fn from(v: $t) -> Self {
                EulerValue(BigInt::from(v))
            }
        }
    )*};
}
from_prim!(i32, i64, u32, u64, usize, i128, u128);

impl fmt::Display for EulerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for EulerValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigInt::from_str(s.trim())
            .map(EulerValue)
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
}

impl Serialize for EulerValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for EulerValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for EulerValue {
    type Output = EulerValue;
    fn add(self, rhs: EulerValue) -> EulerValue {
        EulerValue(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a EulerValue> for EulerValue {
    type Output = EulerValue;
    fn add(self, rhs: &'a EulerValue) -> EulerValue {
        EulerValue(self.0 + &rhs.0)
    }
}

impl AddAssign for EulerValue {
    fn add_assign(&mut self, rhs: EulerValue) {
        self.0 += rhs.0;
    }
}

impl Sub for EulerValue {
    type Output = EulerValue;
    fn sub(self, rhs: EulerValue) -> EulerValue {
        EulerValue(self.0 - rhs.0)
    }
}

impl Mul for EulerValue {
    type Output = EulerValue;
    fn mul(self, rhs: EulerValue) -> EulerValue {
        EulerValue(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a EulerValue> for &'a EulerValue {
    type Output = EulerValue;
    fn mul(self, rhs: &'a EulerValue) -> EulerValue {
        EulerValue(&self.0 * &rhs.0)
    }
}

impl Neg for EulerValue {
    type Output = EulerValue;
    fn neg(self) -> EulerValue {
        EulerValue(-self.0)
    }
}

impl Sum for EulerValue {
    fn sum<I: Iterator<Item = EulerValue>>(iter: I) -> Self {
        iter.fold(EulerValue::zero(), |a, b| a + b)
    }
}
