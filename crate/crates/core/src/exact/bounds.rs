//! Certified rational enclosures.
//!
//! Every approximation in the crate goes through these intervals: a value is
//! bracketed between exact rationals, the bracket is tightened by increasing
//! the working precision, and a decimal string is emitted only once both
//! endpoints round identically. Equality-adjacent decisions never use this
//! module; they stay on the exact paths.

use num_bigint::BigInt;
use num_traits::One;

use super::rational::Rational;

/// A closed interval `[lo, hi]` guaranteed to contain the exact value.
#[derive(Debug, Clone)]
pub struct Bounds {
    pub lo: Rational,
    pub hi: Rational,
}

impl Bounds {
    pub fn exact(v: Rational) -> Bounds {
        Bounds { lo: v.clone(), hi: v }
    }

    /// Encloses `√r` (for `r ≥ 0`) with absolute width at most `10^-digits`.
    pub fn sqrt_rational(r: &Rational, digits: u32) -> Bounds {
        assert!(!r.is_negative(), "sqrt of negative rational");
        if r.is_zero() {
            return Bounds::exact(Rational::zero());
        }
        // √(n/d) = √(n·d)/d with n·d ≥ 0.
        let scale = BigInt::from(10u32).pow(digits);
        let nd = r.numer() * r.denom();
        let s = num_integer::Roots::sqrt(&(&nd * &scale * &scale));
        let den = Rational::from_bigint(r.denom() * &scale);
        Bounds {
            lo: Rational::from_bigint(s.clone()) / den.clone(),
            hi: Rational::from_bigint(s + BigInt::one()) / den,
        }
    }

    pub fn add(&self, other: &Bounds) -> Bounds {
        Bounds {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Bounds) -> Bounds {
        Bounds {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn scale(&self, k: &Rational) -> Bounds {
        if k.is_negative() {
            Bounds {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Bounds {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    pub fn mul(&self, other: &Bounds) -> Bounds {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Bounds { lo, hi }
    }

    /// Division by an interval that is strictly positive.
    pub fn div_positive(&self, other: &Bounds) -> Bounds {
        assert!(other.lo.is_positive(), "divisor interval must be positive");
        self.mul(&Bounds {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        })
    }

    /// Encloses `√self` for an interval known to be nonnegative.
    pub fn sqrt(&self, digits: u32) -> Bounds {
        assert!(!self.lo.is_negative(), "sqrt of possibly-negative interval");
        Bounds {
            lo: Bounds::sqrt_rational(&self.lo, digits).lo,
            hi: Bounds::sqrt_rational(&self.hi, digits).hi,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Rounds both endpoints to `digits` significant digits; `Some` when they
    /// agree, i.e. when the enclosed value is pinned down at that precision.
    pub fn round_agree(&self, digits: u32) -> Option<String> {
        let lo = round_significant(&self.lo, digits);
        let hi = round_significant(&self.hi, digits);
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }
}

/// `10^e` as an exact rational, for any integer exponent.
fn pow10(e: i64) -> Rational {
    let p = Rational::from_bigint(BigInt::from(10u32).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Correctly rounds an exact rational to `digits` significant digits
/// (round-half-to-even on exact ties) in plain decimal notation.
pub fn round_significant(x: &Rational, digits: u32) -> String {
    assert!(digits >= 1);
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let v = x.abs();

    // Decimal exponent e with 10^e ≤ v < 10^(e+1).
    let mut e = v.numer().magnitude().to_string().len() as i64
        - v.denom().magnitude().to_string().len() as i64;
    while v < pow10(e) {
        e -= 1;
    }
    while v >= pow10(e + 1) {
        e += 1;
    }

    let decimals = digits as i64 - 1 - e;
    let scaled = &v * pow10(decimals);
    let floor = scaled.floor_int();
    let frac = &scaled - Rational::from_bigint(floor.clone());
    let half = Rational::new(1, 2);
    let mut n = if frac > half {
        floor + BigInt::one()
    } else if frac < half {
        floor
    } else if num_integer::Integer::is_even(&floor) {
        floor
    } else {
        floor + BigInt::one()
    };

    // Rounding up may spill into the next decade (e.g. 9.99… → 10.0…).
    let mut e = e;
    if n == BigInt::from(10u32).pow(digits) {
        e += 1;
        n = BigInt::from(10u32).pow(digits - 1);
    }

    let ds = n.to_string();
    debug_assert_eq!(ds.len(), digits as usize);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 {
        let int_len = (e + 1) as usize;
        if int_len >= ds.len() {
            out.push_str(&ds);
            out.push_str(&"0".repeat(int_len - ds.len()));
        } else {
            out.push_str(&ds[..int_len]);
            out.push('.');
            out.push_str(&ds[int_len..]);
        }
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat((-e - 1) as usize));
        out.push_str(&ds);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn round_significant_basics() {
        assert_eq!(round_significant(&r(1, 2), 3), "0.500");
        assert_eq!(round_significant(&r(1234, 1), 2), "1200");
        assert_eq!(round_significant(&r(123, 100000), 3), "0.00123");
        assert_eq!(round_significant(&r(-15, 8), 4), "-1.875");
        assert_eq!(round_significant(&r(999, 100), 2), "10");
        assert_eq!(round_significant(&r(25, 10), 1), "2"); // half-even
        assert_eq!(round_significant(&r(35, 10), 1), "4"); // half-even
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let b = Bounds::sqrt_rational(&r(2, 1), 30);
        assert!(b.lo.square() <= r(2, 1));
        assert!(b.hi.square() >= r(2, 1));
        assert!(&b.hi - &b.lo <= pow10(-30));
    }
}
