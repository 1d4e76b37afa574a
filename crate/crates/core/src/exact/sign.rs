//! The two-element sign domain used by witnesses and surds.

use std::fmt;
use std::ops::Neg;

use super::rational::Rational;

/// A sign in `{+1, −1}`. Zero is never a `Sign`; values that may vanish carry
/// their sign in a coefficient instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign of a nonzero rational. Panics on zero.
    pub fn of(r: &Rational) -> Sign {
        match r.signum_i() {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => panic!("Sign::of called on zero"),
        }
    }

    pub fn as_rational(self) -> Rational {
        match self {
            Sign::Plus => Rational::one(),
            Sign::Minus => -Rational::one(),
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Parses `+` or `-`.
    pub fn parse(s: &str) -> Option<Sign> {
        match s.trim() {
            "+" | "+1" => Some(Sign::Plus),
            "-" | "-1" => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}
