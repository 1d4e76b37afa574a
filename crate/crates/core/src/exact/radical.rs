//! Canonical sums of radicals `rationalPart + Σ cᵢ·√rᵢ`.
//!
//! Normalization folds degenerate radicals (rational-square radicands) into
//! the rational part and merges *associated* radicals — pairs whose radicand
//! product is a rational square — into a single term over the smaller
//! radicand. On the normalized form the radicands are pairwise non-associated,
//! so a nonzero term list never represents the number zero and exact sign
//! determination by interval refinement always terminates.
//!
//! Equality is value equality: the difference is normalized and tested for
//! the empty form. This is insensitive to which representative of an
//! association class a radicand happens to use.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::bounds::{round_significant, Bounds};
use super::parse::{self, ParseError};
use super::rational::Rational;
use super::real::ExactReal;
use super::sign::Sign;
use super::ExactError;

/// One radical term `coeff · √radicand` with `coeff ≠ 0`, `radicand > 0` and
/// not a rational square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalTerm {
    pub coeff: Rational,
    pub radicand: Rational,
}

/// A normalized radical sum.
#[derive(Debug, Clone)]
pub struct RadicalSum {
    rational_part: Rational,
    terms: Vec<RadicalTerm>,
}

impl RadicalSum {
    /// Normalizing constructor. Accepts arbitrary raw terms; rejects negative
    /// radicands. Value is preserved exactly.
    pub fn new(
        rational_part: Rational,
        raw_terms: Vec<(Rational, Rational)>,
    ) -> Result<RadicalSum, ExactError> {
        let mut rat = rational_part;
        let mut terms: Vec<RadicalTerm> = Vec::new();
        for (coeff, radicand) in raw_terms {
            if radicand.is_negative() {
                return Err(ExactError::NegativeRadicand(radicand.to_string()));
            }
            if coeff.is_zero() || radicand.is_zero() {
                continue;
            }
            if let Some(root) = radicand.sqrt() {
                rat = rat + coeff * root;
                continue;
            }
            // Merge with an associated radical if one is present.
            let mut merged = false;
            for t in terms.iter_mut() {
                if let Some(s) = (&t.radicand * &radicand).sqrt() {
                    if radicand < t.radicand {
                        // Rewrite the stored term over the smaller radicand:
                        // √(t.radicand) = (s/radicand)·√radicand.
                        t.coeff = &coeff + &t.coeff * &s / &radicand;
                        t.radicand = radicand.clone();
                    } else {
                        // √radicand = (s/t.radicand)·√(t.radicand).
                        t.coeff = &t.coeff + &coeff * &s / &t.radicand;
                    }
                    merged = true;
                    break;
                }
            }
            if !merged {
                terms.push(RadicalTerm { coeff, radicand });
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| a.radicand.cmp(&b.radicand));
        Ok(RadicalSum {
            rational_part: rat,
            terms,
        })
    }

    pub fn zero() -> RadicalSum {
        RadicalSum::from_rational(Rational::zero())
    }

    pub fn from_rational(r: Rational) -> RadicalSum {
        RadicalSum {
            rational_part: r,
            terms: Vec::new(),
        }
    }

    /// `√r` as a radical sum (folds when `r` is a square).
    pub fn from_sqrt(r: Rational) -> Result<RadicalSum, ExactError> {
        RadicalSum::new(Rational::zero(), vec![(Rational::one(), r)])
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational_part
    }

    pub fn terms(&self) -> &[RadicalTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.rational_part.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.terms.is_empty() {
            Some(&self.rational_part)
        } else {
            None
        }
    }

    fn raw_terms(&self) -> Vec<(Rational, Rational)> {
        self.terms
            .iter()
            .map(|t| (t.coeff.clone(), t.radicand.clone()))
            .collect()
    }

    pub fn add(&self, other: &RadicalSum) -> RadicalSum {
        let mut raw = self.raw_terms();
        raw.extend(other.raw_terms());
        RadicalSum::new(&self.rational_part + &other.rational_part, raw)
            .expect("normalized inputs have nonnegative radicands")
    }

    pub fn sub(&self, other: &RadicalSum) -> RadicalSum {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> RadicalSum {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, k: &Rational) -> RadicalSum {
        if k.is_zero() {
            return RadicalSum::zero();
        }
        RadicalSum {
            rational_part: &self.rational_part * k,
            terms: self
                .terms
                .iter()
                .map(|t| RadicalTerm {
                    coeff: &t.coeff * k,
                    radicand: t.radicand.clone(),
                })
                .collect(),
        }
    }

    pub fn add_rational(&self, r: &Rational) -> RadicalSum {
        RadicalSum {
            rational_part: &self.rational_part + r,
            terms: self.terms.clone(),
        }
    }

    /// The exact square, canonicalized as an `ExactReal`. Supported profiles:
    /// a pure rational, a single radical term plus a rational part, or two
    /// radical terms with zero rational part — the shapes a main altitude
    /// `ε√a + ε′√b` can normalize to. Anything else is out of profile.
    pub fn square(&self) -> Result<ExactReal, ExactError> {
        let r = &self.rational_part;
        match self.terms.as_slice() {
            [] => Ok(ExactReal::Rat(r.square())),
            [t] => {
                let c2r = t.coeff.square() * &t.radicand;
                if r.is_zero() {
                    Ok(ExactReal::Rat(c2r))
                } else {
                    // (r + c√m)² = r² + c²m + 2rc·√m
                    let cross = Rational::int(2) * r * &t.coeff;
                    ExactReal::new(
                        r.square() + c2r,
                        Sign::of(&cross),
                        cross.square() * &t.radicand,
                    )
                }
            }
            [t1, t2] if r.is_zero() => {
                // (c₁√m₁ + c₂√m₂)² = c₁²m₁ + c₂²m₂ + 2c₁c₂·√(m₁m₂)
                let cross = Rational::int(2) * &t1.coeff * &t2.coeff;
                ExactReal::new(
                    t1.coeff.square() * &t1.radicand + t2.coeff.square() * &t2.radicand,
                    Sign::of(&cross),
                    cross.square() * &t1.radicand * &t2.radicand,
                )
            }
            _ => Err(ExactError::UnsupportedProfile(format!(
                "cannot square {self}: more than two radical terms (or two terms with a rational part)"
            ))),
        }
    }

    /// Rational enclosure with per-radical absolute error at most `10^-digits`.
    pub(crate) fn bounds(&self, digits: u32) -> Bounds {
        let mut b = Bounds::exact(self.rational_part.clone());
        for t in &self.terms {
            b = b.add(&Bounds::sqrt_rational(&t.radicand, digits).scale(&t.coeff));
        }
        b
    }

    /// Exact sign. Structural zero is `Equal`; otherwise the value is nonzero
    /// (non-associated radicals are linearly independent over ℚ) and interval
    /// refinement terminates.
    pub fn sign(&self) -> Ordering {
        match self.terms.as_slice() {
            [] => self.rational_part.cmp_zero(),
            [t] => {
                let r = &self.rational_part;
                if r.is_zero() {
                    return t.coeff.cmp_zero();
                }
                if r.signum_i() == t.coeff.signum_i() {
                    return r.cmp_zero();
                }
                // Opposite signs: compare |c√m| with |r| via squares; equality
                // would make √m rational, which normalization excludes.
                let term_sq = t.coeff.square() * &t.radicand;
                match term_sq.cmp(&r.square()) {
                    Ordering::Greater => t.coeff.cmp_zero(),
                    Ordering::Less => r.cmp_zero(),
                    Ordering::Equal => unreachable!("degenerate radical survived normalization"),
                }
            }
            _ => {
                let mut digits = 16;
                loop {
                    let b = self.bounds(digits);
                    if b.lo.is_positive() {
                        return Ordering::Greater;
                    }
                    if b.hi.is_negative() {
                        return Ordering::Less;
                    }
                    digits *= 2;
                    assert!(
                        digits <= 1 << 22,
                        "sign refinement exceeded precision cap for {self}"
                    );
                }
            }
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.sign() != Ordering::Less
    }

    /// Exact value comparison.
    pub fn cmp_value(&self, other: &RadicalSum) -> Ordering {
        self.sub(other).sign()
    }

    /// Correctly rounded decimal approximation to `digits` significant digits.
    pub fn approx(&self, digits: u32) -> String {
        let digits = digits.clamp(1, MAX_APPROX_DIGITS);
        if let Some(r) = self.as_rational() {
            return round_significant(r, digits);
        }
        let mut guard = digits + 8;
        loop {
            if let Some(s) = self.bounds(guard).round_agree(digits) {
                return s;
            }
            guard *= 2;
            assert!(
                guard <= 1 << 22,
                "approximation exceeded precision cap for {self}"
            );
        }
    }
}

/// Hard cap on requested significant digits.
pub const MAX_APPROX_DIGITS: u32 = 4096;

impl PartialEq for RadicalSum {
    fn eq(&self, other: &RadicalSum) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for RadicalSum {}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational_part);
        }
        let mut first = true;
        for t in &self.terms {
            let mag = t.coeff.abs();
            let lead = if t.coeff.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            if mag.is_one() {
                write!(f, "{lead}sqrt({})", t.radicand)?;
            } else {
                write!(f, "{lead}{mag}*sqrt({})", t.radicand)?;
            }
            first = false;
        }
        if !self.rational_part.is_zero() {
            if self.rational_part.is_negative() {
                write!(f, "-{}", self.rational_part.abs())?;
            } else {
                write!(f, "+{}", self.rational_part)?;
            }
        }
        Ok(())
    }
}

impl FromStr for RadicalSum {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<RadicalSum, ParseError> {
        parse::parse_radical_sum(s)
    }
}
