//! The Lawvere quantale `([0,∞], +, 0)` over exact rationals.
//!
//! The quantale order is the reverse of the numeric order: `∞` is the bottom,
//! `0` is both the unit and the top. Joins are numeric minima.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::Quantale;
use crate::error::{Error, Result};

/// A value in `[0, ∞]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LawvereValue {
    Finite(BigRational),
    Infinity,
}

impl LawvereValue {
    pub fn zero() -> Self {
        LawvereValue::Finite(BigRational::zero())
    }

    pub fn int(v: i64) -> Self {
        Self::ratio(v, 1)
    }

    /// `num / den`; panics on a negative value or zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        Self::try_from(r).expect("nonnegative rational")
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, LawvereValue::Infinity)
    }

    /// Truncated subtraction `max(self - other, 0)` with `∞ - ∞ = 0`.
    pub fn truncated_sub(&self, other: &Self) -> Self {
        match (self, other) {
            (LawvereValue::Infinity, LawvereValue::Infinity) => Self::zero(),
            (LawvereValue::Infinity, _) => LawvereValue::Infinity,
            (_, LawvereValue::Infinity) => Self::zero(),
            (LawvereValue::Finite(a), LawvereValue::Finite(b)) => {
                if a > b {
                    LawvereValue::Finite(a - b)
                } else {
                    Self::zero()
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (LawvereValue::Finite(a), LawvereValue::Finite(b)) => LawvereValue::Finite(a + b),
            _ => LawvereValue::Infinity,
        }
    }

    pub fn numeric_max(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn numeric_min(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

impl TryFrom<BigRational> for LawvereValue {
    type Error = Error;

    fn try_from(r: BigRational) -> Result<Self> {
        if r.is_negative() {
            Err(Error::InvalidParameter(format!(
                "Lawvere values are nonnegative, got {r}"
            )))
        } else {
            Ok(LawvereValue::Finite(r))
        }
    }
}

/// Numeric order, with `∞` largest.
impl PartialOrd for LawvereValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LawvereValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LawvereValue::Infinity, LawvereValue::Infinity) => Ordering::Equal,
            (LawvereValue::Infinity, _) => Ordering::Greater,
            (_, LawvereValue::Infinity) => Ordering::Less,
            (LawvereValue::Finite(a), LawvereValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for LawvereValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawvereValue::Infinity => f.write_str("inf"),
            LawvereValue::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for LawvereValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "∞" | "infinity") {
            return Ok(LawvereValue::Infinity);
        }
        let r: BigRational = s
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("not a rational or 'inf': {s:?}")))?;
        Self::try_from(r)
    }
}

/// The Lawvere quantale backend. Enumeration is not supported.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Lawvere;

impl Quantale for Lawvere {
    type Elem = LawvereValue;

    fn le(&self, a: &LawvereValue, b: &LawvereValue) -> bool {
        a >= b
    }
    fn join(&self, a: &LawvereValue, b: &LawvereValue) -> LawvereValue {
        a.numeric_min(b)
    }
    fn meet(&self, a: &LawvereValue, b: &LawvereValue) -> LawvereValue {
        a.numeric_max(b)
    }
    fn bottom(&self) -> LawvereValue {
        LawvereValue::Infinity
    }
    fn top(&self) -> LawvereValue {
        LawvereValue::zero()
    }
    fn mul(&self, a: &LawvereValue, b: &LawvereValue) -> LawvereValue {
        a.add(b)
    }
    fn unit(&self) -> LawvereValue {
        LawvereValue::zero()
    }
    fn involution(&self, a: &LawvereValue) -> LawvereValue {
        a.clone()
    }
    fn left_imp(&self, r: &LawvereValue, b: &LawvereValue) -> LawvereValue {
        r.truncated_sub(b)
    }
    fn right_imp(&self, a: &LawvereValue, r: &LawvereValue) -> LawvereValue {
        r.truncated_sub(a)
    }
    fn elements(&self) -> Result<Vec<LawvereValue>> {
        Err(Error::Capability(
            "the Lawvere quantale [0,∞] is infinite and cannot be enumerated".into(),
        ))
    }
    fn show(&self, a: &LawvereValue) -> String {
        a.to_string()
    }
}
