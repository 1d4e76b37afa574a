//! Arithmetic in a fixed real quadratic extension `ℚ(√d)`.
//!
//! Elements are coefficient pairs `x + y·√d`; the radicand `d` is carried by
//! the caller and must not be a rational square, so the pair representation
//! is faithful and equality is componentwise.

use super::rational::Rational;
use super::real::ExactReal;
use super::sign::Sign;

/// `x + y·√d` for an implicit common radicand `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadNum {
    pub x: Rational,
    pub y: Rational,
}

impl QuadNum {
    pub fn new(x: Rational, y: Rational) -> QuadNum {
        QuadNum { x, y }
    }

    pub fn from_rational(x: Rational) -> QuadNum {
        QuadNum::new(x, Rational::zero())
    }

    pub fn add(&self, other: &QuadNum) -> QuadNum {
        QuadNum::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &QuadNum) -> QuadNum {
        QuadNum::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn mul(&self, other: &QuadNum, d: &Rational) -> QuadNum {
        QuadNum::new(
            &self.x * &other.x + &self.y * &other.y * d,
            &self.x * &other.y + &self.y * &other.x,
        )
    }

    pub fn square(&self, d: &Rational) -> QuadNum {
        self.mul(self, d)
    }

    pub fn scale(&self, k: &Rational) -> QuadNum {
        QuadNum::new(&self.x * k, &self.y * k)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// The canonical `ExactReal` value of this element.
    pub fn to_exact_real(&self, d: &Rational) -> ExactReal {
        if self.y.is_zero() {
            return ExactReal::Rat(self.x.clone());
        }
        let sign = Sign::of(&self.y);
        ExactReal::new(self.x.clone(), sign, &self.y.square() * d)
            .expect("nonnegative scaled radicand")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn field_arithmetic() {
        let d = r(3, 1);
        let a = QuadNum::new(r(1, 2), r(1, 1)); // 1/2 + √3
        let b = QuadNum::new(r(0, 1), r(2, 1)); // 2√3
        let prod = a.mul(&b, &d); // √3 + 6 → 6 + √3·... (1/2+√3)(2√3) = √3 + 6
        assert_eq!(prod, QuadNum::new(r(6, 1), r(1, 1)));
        let sq = b.square(&d);
        assert_eq!(sq, QuadNum::new(r(12, 1), r(0, 1)));
    }

    #[test]
    fn exact_real_view() {
        let d = r(3, 4);
        let a = QuadNum::new(r(0, 1), r(-1, 1));
        let v = a.to_exact_real(&d);
        assert_eq!(v, ExactReal::new(r(0, 1), Sign::Minus, r(3, 4)).unwrap());
    }
}
