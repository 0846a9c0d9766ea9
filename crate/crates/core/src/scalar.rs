//! Scalar abstraction shared by every algebraic structure in the crate.
//!
//! All constructions are written against [`Scalar`] so that they can be run
//! over exact rationals (the default, see [`crate::Rational`]) or over `f64`
//! for quick numerical experiments. Every identity the crate certifies is
//! certified over the rationals.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A field element usable as a coefficient.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Image of an exact rational (rounded for inexact scalars).
    fn from_rational(q: &BigRational) -> Self;

    /// True when arithmetic never rounds.
    fn is_exact() -> bool;

    /// Cost of using `self` as an elimination pivot; smaller is preferred.
    fn pivot_cost(&self) -> u64;

    /// Zero test used by elimination; exact scalars use `is_zero`.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn is_exact() -> bool {
        true
    }

    fn pivot_cost(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_rational(q: &BigRational) -> Self {
        num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        false
    }

    // partial pivoting: prefer the largest magnitude
    fn pivot_cost(&self) -> u64 {
        let m = self.abs();
        if m == 0.0 {
            u64::MAX
        } else {
            (u64::MAX / 2).saturating_sub((m.log2() * 1e6) as i64 as u64)
        }
    }

    fn is_negligible(&self) -> bool {
        self.abs() < 1e-12
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p"`, `"-p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| err())?;
    let d = BigInt::from_str(den).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// `serde` adapter writing rationals as strings.
pub mod rational_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => parse_rational(&s).map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) if n.is_i64() => {
                Ok(BigRational::from_i64(n.as_i64().unwrap()))
            }
            other => Err(serde::de::Error::custom(format!(
                "expected rational string, got {other}"
            ))),
        }
    }
}

/// Absolute value of a rational, used by pivot heuristics.
pub fn rational_abs(q: &BigRational) -> BigRational {
    q.abs()
}
