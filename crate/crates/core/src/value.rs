//! Exact rationals and the extended non-negative values used for distances,
//! diameters and hyperbolicity constants.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = Ratio<i64>;

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (s.parse::<i64>().ok()?, 1),
    };
    if den == 0 {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Always `p/q`, reduced, with a positive denominator (`0/1`, `3/1`, `-1/2`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A non-negative rational or `+∞`.
///
/// Values produced by the hyperbolicity engine are multiples of 1/4; distances
/// between arbitrary graph points need not be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarterValue {
    Finite(Rational),
    Infinite,
}

impl QuarterValue {
    pub const ZERO: QuarterValue = QuarterValue::Finite(Ratio::new_raw(0, 1));

    pub fn new(r: Rational) -> Self {
        debug_assert!(!r.is_negative());
        QuarterValue::Finite(r)
    }

    /// `k/4`.
    pub fn quarters(k: i64) -> Self {
        QuarterValue::Finite(Rational::new(k, 4))
    }

    pub fn integer(k: i64) -> Self {
        QuarterValue::Finite(Rational::from_integer(k))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, QuarterValue::Finite(_))
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            QuarterValue::Finite(r) => Some(*r),
            QuarterValue::Infinite => None,
        }
    }

    /// Numerator over 4 when the value is a finite multiple of 1/4.
    pub fn as_quarters(&self) -> Option<i64> {
        let r = self.finite()?;
        let q = r * Rational::from_integer(4);
        q.is_integer().then(|| q.to_integer())
    }

    pub fn is_quarter_multiple(&self) -> bool {
        self.as_quarters().is_some()
    }

    pub fn half(&self) -> Self {
        match self {
            QuarterValue::Finite(r) => QuarterValue::Finite(r / 2),
            QuarterValue::Infinite => QuarterValue::Infinite,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        match self {
            QuarterValue::Finite(r) => QuarterValue::Finite(r * k),
            QuarterValue::Infinite if k == 0 => QuarterValue::ZERO,
            QuarterValue::Infinite => QuarterValue::Infinite,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (QuarterValue::Finite(a), QuarterValue::Finite(b)) => QuarterValue::Finite(a * b),
            (QuarterValue::Finite(a), QuarterValue::Infinite)
            | (QuarterValue::Infinite, QuarterValue::Finite(a))
                if a.is_zero() =>
            {
                QuarterValue::ZERO
            }
            _ => QuarterValue::Infinite,
        }
    }
}

impl Add for QuarterValue {
    type Output = QuarterValue;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (QuarterValue::Finite(a), QuarterValue::Finite(b)) => QuarterValue::Finite(a + b),
            _ => QuarterValue::Infinite,
        }
    }
}

impl From<Rational> for QuarterValue {
    fn from(r: Rational) -> Self {
        QuarterValue::new(r)
    }
}

impl Ord for QuarterValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (QuarterValue::Finite(a), QuarterValue::Finite(b)) => a.cmp(b),
            (QuarterValue::Finite(_), QuarterValue::Infinite) => Ordering::Less,
            (QuarterValue::Infinite, QuarterValue::Finite(_)) => Ordering::Greater,
            (QuarterValue::Infinite, QuarterValue::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for QuarterValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuarterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuarterValue::Finite(r) => f.write_str(&format_rational(r)),
            QuarterValue::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for QuarterValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "inf" {
            return Ok(QuarterValue::Infinite);
        }
        match parse_rational(s) {
            Some(r) if !r.is_negative() => Ok(QuarterValue::Finite(r)),
            _ => Err(format!("not a non-negative rational: {s:?}")),
        }
    }
}

impl Serialize for QuarterValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QuarterValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`Rational`] as a `"p/q"` string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}
