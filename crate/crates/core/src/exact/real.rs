//! Canonical quadratic surds `a + s·√b`.
//!
//! A value is stored as `Surd` only when `b > 0` and `√b` is irrational;
//! everything else folds to a plain rational at construction. On that
//! canonical form structural equality coincides with equality of real
//! numbers, so `ExactReal` derives `PartialEq`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::parse::{self, ParseError};
use super::radical::RadicalSum;
use super::rational::Rational;
use super::sign::Sign;
use super::ExactError;

/// A real number that is either rational or a quadratic surd `a + s·√b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactReal {
    Rat(Rational),
    Surd {
        a: Rational,
        sign: Sign,
        b: Rational,
    },
}

impl ExactReal {
    /// Canonicalizing constructor for `a + s·√b`. Folds to `Rat` whenever
    /// `√b` is rational; rejects negative radicands.
    pub fn new(a: Rational, sign: Sign, b: Rational) -> Result<ExactReal, ExactError> {
        if b.is_negative() {
            return Err(ExactError::NegativeRadicand(b.to_string()));
        }
        match b.sqrt() {
            Some(root) => Ok(ExactReal::Rat(a + sign.as_rational() * root)),
            None => Ok(ExactReal::Surd { a, sign, b }),
        }
    }

    pub fn rational(r: Rational) -> ExactReal {
        ExactReal::Rat(r)
    }

    pub fn int(n: i64) -> ExactReal {
        ExactReal::Rat(Rational::int(n))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactReal::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ExactReal::Rat(r) => Some(r),
            ExactReal::Surd { .. } => None,
        }
    }

    /// `self + r`.
    pub fn add_rational(&self, r: &Rational) -> ExactReal {
        match self {
            ExactReal::Rat(a) => ExactReal::Rat(a + r),
            ExactReal::Surd { a, sign, b } => ExactReal::Surd {
                a: a + r,
                sign: *sign,
                b: b.clone(),
            },
        }
    }

    pub fn sub_rational(&self, r: &Rational) -> ExactReal {
        self.add_rational(&-r)
    }

    /// `self · k` for rational `k`; the radical coefficient folds into the
    /// radicand so the result stays canonical.
    pub fn scale(&self, k: &Rational) -> ExactReal {
        if k.is_zero() {
            return ExactReal::Rat(Rational::zero());
        }
        match self {
            ExactReal::Rat(a) => ExactReal::Rat(a * k),
            ExactReal::Surd { a, sign, b } => {
                let sign = if k.is_negative() { -*sign } else { *sign };
                ExactReal::Surd {
                    a: a * k,
                    sign,
                    b: b * &k.square(),
                }
            }
        }
    }

    pub fn neg(&self) -> ExactReal {
        self.scale(&-Rational::one())
    }

    /// View as a radical sum (zero or one term).
    pub fn to_radical_sum(&self) -> RadicalSum {
        match self {
            ExactReal::Rat(a) => RadicalSum::from_rational(a.clone()),
            ExactReal::Surd { a, sign, b } => {
                RadicalSum::new(a.clone(), vec![(sign.as_rational(), b.clone())])
                    .expect("nonnegative radicand")
            }
        }
    }

    /// Exact comparison against zero.
    pub fn sign(&self) -> Ordering {
        match self {
            ExactReal::Rat(a) => a.cmp_zero(),
            ExactReal::Surd { a, sign, b } => {
                // a + s·√b with √b irrational, hence never exactly zero.
                match (a.cmp_zero(), sign) {
                    (Ordering::Greater | Ordering::Equal, Sign::Plus) => Ordering::Greater,
                    (Ordering::Less | Ordering::Equal, Sign::Minus) => Ordering::Less,
                    // Opposite signs: compare a² with b.
                    (_, Sign::Plus) => b.cmp(&a.square()).then(Ordering::Less),
                    (_, Sign::Minus) => a.square().cmp(b).then(Ordering::Greater),
                }
            }
        }
    }

    /// Exact value comparison.
    pub fn cmp_value(&self, other: &ExactReal) -> Ordering {
        self.to_radical_sum().sub(&other.to_radical_sum()).sign()
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.sub_rational(r).sign()
    }

    /// Correctly rounded decimal approximation to `digits` significant digits.
    pub fn approx(&self, digits: u32) -> String {
        self.to_radical_sum().approx(digits)
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rat(a) => write!(f, "{a}"),
            ExactReal::Surd { a, sign, b } => {
                if a.is_zero() {
                    match sign {
                        Sign::Plus => write!(f, "sqrt({b})"),
                        Sign::Minus => write!(f, "-sqrt({b})"),
                    }
                } else {
                    write!(f, "{a}{sign}sqrt({b})")
                }
            }
        }
    }
}

impl FromStr for ExactReal {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<ExactReal, ParseError> {
        parse::parse_exact_real(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn construction_folds_degenerate_radicals() {
        let x = ExactReal::new(r(2, 1), Sign::Plus, r(9, 1)).unwrap();
        assert_eq!(x, ExactReal::int(5));
        let y = ExactReal::new(r(2, 1), Sign::Plus, r(3, 1)).unwrap();
        assert!(matches!(y, ExactReal::Surd { .. }));
        let z = ExactReal::new(r(0, 1), Sign::Minus, r(4, 1)).unwrap();
        assert_eq!(z, ExactReal::int(-2));
        assert!(ExactReal::new(r(0, 1), Sign::Plus, r(-1, 1)).is_err());
    }

    #[test]
    fn structural_equality_is_value_equality() {
        let a = ExactReal::new(r(2, 1), Sign::Plus, r(3, 1)).unwrap();
        let b = ExactReal::new(r(2, 1), Sign::Plus, r(3, 1)).unwrap();
        let c = ExactReal::new(r(2, 1), Sign::Minus, r(3, 1)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn exact_sign() {
        let x = ExactReal::new(r(-1, 1), Sign::Plus, r(2, 1)).unwrap(); // √2 − 1 > 0
        assert_eq!(x.sign(), Ordering::Greater);
        let y = ExactReal::new(r(-2, 1), Sign::Plus, r(2, 1)).unwrap(); // √2 − 2 < 0
        assert_eq!(y.sign(), Ordering::Less);
        let z = ExactReal::new(r(3, 2), Sign::Minus, r(2, 1)).unwrap(); // 3/2 − √2 > 0
        assert_eq!(z.sign(), Ordering::Greater);
    }

    #[test]
    fn scale_keeps_canonical_form() {
        let x = ExactReal::new(r(2, 1), Sign::Plus, r(3, 1)).unwrap();
        let y = x.scale(&r(-1, 2)); // −1 − √3/2 = −1 − √(3/4)
        assert_eq!(
            y,
            ExactReal::new(r(-1, 1), Sign::Minus, r(3, 4)).unwrap()
        );
    }

    #[test]
    fn display_round_trip() {
        for s in ["2+sqrt(3)", "-1/2-sqrt(3/4)", "5", "sqrt(2)"] {
            let v: ExactReal = s.parse().unwrap();
            assert_eq!(v.to_string().parse::<ExactReal>().unwrap(), v);
        }
    }
}
