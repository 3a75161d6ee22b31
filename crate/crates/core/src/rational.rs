//! Exact rational arithmetic for centrality sums.
//!
//! Scores such as closeness and straightness mix reciprocals of integers.
//! Summing them as floating point numbers can split genuine ties (or create
//! false ones), which silently distorts every tie-averaged rank downstream.
//! All score arithmetic in this crate therefore goes through [`Rational`],
//! an arbitrary-precision fraction kept in lowest terms. Floating point only
//! appears when a finished report is rendered.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::{BigInt, Sign};
use num::ToPrimitive;
use num::{BigRational, One, Signed, Zero};

/// An exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality is value equality regardless of how the value
/// was built up.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn from_bigint(value: BigInt) -> Self {
        Rational(BigRational::from_integer(value))
    }

    /// Builds `numerator / denominator`, reduced. Panics if `denominator`
    /// is zero; all call sites in this crate divide by counts that are
    /// checked to be nonzero first.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "zero denominator");
        Rational(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        ))
    }

    pub fn from_ratio(numerator: BigInt, denominator: BigInt) -> Self {
        assert!(!denominator.is_zero(), "zero denominator");
        Rational(BigRational::new(numerator, denominator))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Total order by exact cross-multiplication.
    pub fn compare(&self, other: &Rational) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Renders the value as a decimal with `digits` fractional digits,
    /// rounding ties half-to-even.
    pub fn to_decimal(&self, digits: usize) -> String {
        let sign = self.0.numer().sign();
        let mut numer = self.0.numer().abs();
        for _ in 0..digits {
            numer *= 10;
        }
        let denom = self.0.denom();
        let (mut quot, rem) = num::Integer::div_rem(&numer, denom);
        let twice: BigInt = &rem * 2;
        match twice.cmp(denom) {
            Ordering::Greater => quot += 1,
            Ordering::Less => {}
            Ordering::Equal => {
                // Half-way: round to even.
                if num::Integer::is_odd(&quot) {
                    quot += 1;
                }
            }
        }
        let mut body = quot.to_string();
        if body.len() <= digits {
            body = format!("{}{}", "0".repeat(digits + 1 - body.len()), body);
        }
        let split = body.len() - digits;
        let rendered = if digits == 0 {
            body
        } else {
            format!("{}.{}", &body[..split], &body[split..])
        };
        if sign == Sign::Minus && rendered.chars().any(|c| c.is_ascii_digit() && c != '0') {
            format!("-{rendered}")
        } else {
            rendered
        }
    }
}

impl fmt::Display for Rational {
    /// Integers print bare, everything else as `numerator/denominator`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl From<usize> for Rational {
    fn from(value: usize) -> Self {
        Rational::from_bigint(BigInt::from(value))
    }
}

impl From<u64> for Rational {
    fn from(value: u64) -> Self {
        Rational::from_bigint(BigInt::from(value))
    }
}

impl serde::Serialize for Rational {
    /// Reports carry rationals as their 3-digit decimal rendering so the
    /// TSV and JSON forms of a report contain identical values.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_decimal(3))
    }
}
