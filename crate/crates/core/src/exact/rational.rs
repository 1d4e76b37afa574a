//! Arbitrary-precision rationals, always held in lowest terms with a positive
//! denominator. Zero is `0/1`. The *height* of a rational is
//! `max(|numerator|, denominator)` on this canonical form; it is the bound
//! that drives every exhaustive enumeration in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parse::{self, ParseError};
use super::ExactError;

/// An exact rational number in canonical lowest-terms form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `n/d`, reducing to lowest terms. Fails on `d = 0`.
    pub fn try_new(numer: BigInt, denom: BigInt) -> Result<Rational, ExactError> {
        if denom.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    /// `n/d` from machine integers; panics on `d = 0`.
    pub fn new(numer: i64, denom: i64) -> Rational {
        Rational::try_new(BigInt::from(numer), BigInt::from(denom)).expect("nonzero denominator")
    }

    /// The integer `n` as a rational.
    pub fn int(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Rational {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Sign as an integer in `{-1, 0, +1}`.
    pub fn signum_i(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Rational {
        self * self
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    /// `max(|numerator|, denominator)` on the canonical form.
    pub fn height(&self) -> BigUint {
        self.0.numer().magnitude().max(self.0.denom().magnitude()).clone()
    }

    pub fn height_le(&self, bound: u32) -> bool {
        self.height() <= BigUint::from(bound)
    }

    /// The exact nonnegative square root, when this value is the square of a
    /// rational: both the numerator and the denominator of the canonical form
    /// must be integer perfect squares. Negative inputs and non-squares yield
    /// `None`.
    pub fn sqrt(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let n = self.0.numer();
        let d = self.0.denom();
        let sn = n.sqrt();
        if &(&sn * &sn) != n {
            return None;
        }
        let sd = d.sqrt();
        if &(&sd * &sd) != d {
            return None;
        }
        Some(Rational(BigRational::new(sn, sd)))
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    /// Floor of the value as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn min(self, other: Rational) -> Rational {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rational) -> Rational {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn cmp_zero(&self) -> Ordering {
        self.signum_i().cmp(&0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Rational, ParseError> {
        parse::parse_rational(s)
    }
}
