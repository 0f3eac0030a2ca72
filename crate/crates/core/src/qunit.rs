//! Exact rationals in the unit interval with the standard MV operations.
//!
//! [`Unit<T>`] is generic over the integer type carrying numerator and
//! denominator. The toolkit itself runs on [`crate::UnitRational`]
//! (arbitrary precision); fixed-width instantiations such as
//! [`crate::UnitRational64`] are useful for quick experiments but may overflow.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer types that can carry the numerator and denominator of a [`Unit`].
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + fmt::Debug
    + fmt::Display
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + fmt::Debug
        + fmt::Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
{
}

/// A rational number in `[0,1]`, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Unit<T: Scalar>(Ratio<T>);

impl<T: Scalar> Unit<T> {
    pub fn zero() -> Self {
        Unit(Ratio::zero())
    }

    pub fn one() -> Self {
        Unit(Ratio::one())
    }

    /// `numer / denom`, reduced. Fails if the denominator is zero or the
    /// value leaves `[0,1]`.
    pub fn new(numer: T, denom: T) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ParseRational {
                text: format!("{numer}/{denom}"),
                reason: "zero denominator",
            });
        }
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<T>) -> Result<Self> {
        if r.is_negative() || r > Ratio::one() {
            return Err(Error::OutOfUnitInterval(r.to_string()));
        }
        Ok(Unit(r))
    }

    /// `k / n` for a grid point of the Łukasiewicz chain `Ł_n`.
    pub fn from_grid(k: u64, n: u64) -> Self {
        let num = T::from_u64(k).expect("grid numerator fits the scalar type");
        let den = T::from_u64(n).expect("grid denominator fits the scalar type");
        Self::new(num, den).expect("grid point lies in [0,1]")
    }

    pub fn as_ratio(&self) -> &Ratio<T> {
        &self.0
    }

    pub fn numer(&self) -> &T {
        self.0.numer()
    }

    pub fn denom(&self) -> &T {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Numerator of this value over `n`, when the value lies on `Ł_n`.
    pub fn on_grid(&self, n: u64) -> Option<u64> {
        let scaled = self.0.clone() * Ratio::from_integer(T::from_u64(n)?);
        if scaled.is_integer() {
            scaled.to_integer().to_u64()
        } else {
            None
        }
    }

    fn clamp(r: Ratio<T>) -> Self {
        if r.is_negative() {
            Self::zero()
        } else if r > Ratio::one() {
            Self::one()
        } else {
            Unit(r)
        }
    }

    /// Truncated sum `min(1, a + b)`.
    pub fn mv_add(&self, other: &Self) -> Self {
        Self::clamp(self.0.clone() + other.0.clone())
    }

    /// Łukasiewicz product `max(0, a + b - 1)`.
    pub fn mv_mul(&self, other: &Self) -> Self {
        Self::clamp(self.0.clone() + other.0.clone() - Ratio::one())
    }

    pub fn mv_neg(&self) -> Self {
        Unit(Ratio::one() - self.0.clone())
    }

    /// `a ⊖ b = a ⊙ b*`.
    pub fn mv_sub(&self, other: &Self) -> Self {
        self.mv_mul(&other.mv_neg())
    }

    pub fn join(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn meet(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Chang distance `(a ⊖ b) ⊕ (b ⊖ a)`, equal to `|a - b|`.
    pub fn dist(&self, other: &Self) -> Self {
        self.mv_sub(other).mv_add(&other.mv_sub(self))
    }

    /// n-fold truncated sum `min(1, n·a)`.
    pub fn scale(&self, n: u64) -> Self {
        let n = T::from_u64(n).expect("multiplier fits the scalar type");
        Self::clamp(self.0.clone() * Ratio::from_integer(n))
    }

    /// n-fold Łukasiewicz power `max(0, n·a - n + 1)`.
    pub fn power(&self, n: u64) -> Self {
        let nn = Ratio::from_integer(T::from_u64(n).expect("exponent fits the scalar type"));
        Self::clamp(self.0.clone() * nn.clone() - nn + Ratio::one())
    }
}

impl<T: Scalar> PartialOrd for Unit<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Unit<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl<T: Scalar> fmt::Display for Unit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl<T: Scalar> fmt::Debug for Unit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: Scalar> FromStr for Unit<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason| Error::ParseRational {
            text: s.to_string(),
            reason,
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        if num.is_empty() || den.is_empty() {
            return Err(bad("empty numerator or denominator"));
        }
        if num.starts_with('-') || den.starts_with('-') || num.starts_with('+') {
            return Err(bad("signs are not allowed"));
        }
        let num: T = num.parse().map_err(|_| bad("numerator is not an integer"))?;
        let den: T = den.parse().map_err(|_| bad("denominator is not an integer"))?;
        Unit::new(num, den)
    }
}

impl<T: Scalar> Serialize for Unit<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Unit<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}
