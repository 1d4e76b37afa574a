//! Parser for the shared text grammar.
//!
//! ```text
//! Rational   = [-] digits [ "/" digits ]
//! ExactReal  = Rational | [Rational] ("+"|"-") "sqrt" "(" Rational ")"
//!            | ["-"] "sqrt" "(" Rational ")"
//! RadicalSum = ["-"] item { ("+"|"-") item }
//! item       = Rational [ "*" "sqrt" "(" Rational ")" ] | "sqrt" "(" Rational ")"
//! ```
//!
//! Whitespace is insignificant everywhere. Inputs are normalized, never
//! rejected for being unreduced (`2/4`, `sqrt(4)`, `sqrt(8)+sqrt(2)` are all
//! fine); only negative radicands are value-level errors. Errors carry the
//! byte position in the original string and what was expected there.

use num_bigint::BigInt;
use thiserror::Error;

use super::radical::RadicalSum;
use super::rational::Rational;
use super::real::ExactReal;
use super::sign::Sign;

/// A parse failure: where, and what would have been accepted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

fn err<T>(position: usize, expected: &str) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        expected: expected.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Slash,
    Star,
    Plus,
    Minus,
    Sqrt,
    LParen,
    RParen,
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    end: usize,
    pos: usize,
}

fn lex(s: &str) -> Result<Lexer, ParseError> {
    let bytes = s.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '/' => {
                tokens.push((i, Token::Slash));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().expect("digit run");
                tokens.push((start, Token::Int(n)));
            }
            's' | 'S' => {
                if s[i..].len() >= 4 && s[i..i + 4].eq_ignore_ascii_case("sqrt") {
                    tokens.push((i, Token::Sqrt));
                    i += 4;
                } else {
                    return err(i, "'sqrt'");
                }
            }
            _ => return err(i, "digit, sign, 'sqrt', '*', '/', '(' or ')'"),
        }
    }
    Ok(Lexer {
        tokens,
        end: s.len(),
        pos: 0,
    })
}

impl Lexer {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.position(), what)
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            err(self.position(), "end of input")
        }
    }

    /// `digits [ "/" digits ]`, with the sign already consumed by the caller.
    fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let pos = self.position();
        let numer = match self.bump() {
            Some(Token::Int(n)) => n,
            _ => return err(pos, "digits"),
        };
        if self.peek() == Some(&Token::Slash) {
            self.pos += 1;
            let pos = self.position();
            match self.bump() {
                Some(Token::Int(d)) => {
                    if num_traits::Zero::is_zero(&d) {
                        return err(pos, "nonzero denominator");
                    }
                    Ok(Rational::try_new(numer, d).expect("nonzero denominator"))
                }
                _ => return err(pos, "denominator digits"),
            }
        } else {
            Ok(Rational::from_bigint(numer))
        }
    }

    /// `"sqrt" "(" Rational ")"`, returning the radicand.
    fn sqrt_radicand(&mut self) -> Result<Rational, ParseError> {
        self.expect(Token::Sqrt, "'sqrt'")?;
        self.expect(Token::LParen, "'('")?;
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let r = self.unsigned_rational()?;
        self.expect(Token::RParen, "')'")?;
        Ok(if negative { -r } else { r })
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let mut lx = lex(s)?;
    let negative = if lx.peek() == Some(&Token::Minus) {
        lx.pos += 1;
        true
    } else {
        false
    };
    let r = lx.unsigned_rational()?;
    lx.expect_end()?;
    Ok(if negative { -r } else { r })
}

pub fn parse_exact_real(s: &str) -> Result<ExactReal, ParseError> {
    let radical = parse_radical_sum(s)?;
    let at = |expected: &str| ParseError {
        position: 0,
        expected: expected.to_string(),
    };
    match radical.terms() {
        [] => Ok(ExactReal::Rat(radical.rational_part().clone())),
        [t] => {
            if !t.coeff.abs().is_one() {
                // a ± sqrt(b) admits no coefficient; c·√m folds into √(c²m).
                return ExactReal::new(
                    radical.rational_part().clone(),
                    Sign::of(&t.coeff),
                    t.coeff.square() * &t.radicand,
                )
                .map_err(|e| at(&e.to_string()));
            }
            ExactReal::new(
                radical.rational_part().clone(),
                Sign::of(&t.coeff),
                t.radicand.clone(),
            )
            .map_err(|e| at(&e.to_string()))
        }
        _ => Err(at("a value of the form a, a+sqrt(b) or a-sqrt(b)")),
    }
}

pub fn parse_radical_sum(s: &str) -> Result<RadicalSum, ParseError> {
    let mut lx = lex(s)?;
    let mut rational = Rational::zero();
    let mut terms: Vec<(Rational, Rational)> = Vec::new();
    let mut first = true;
    loop {
        // Sign between items ('+' optional only for the first item).
        let mut sign = Rational::one();
        match lx.peek() {
            Some(Token::Plus) => {
                lx.pos += 1;
            }
            Some(Token::Minus) => {
                lx.pos += 1;
                sign = -sign;
            }
            _ if first => {}
            _ => return err(lx.position(), "'+' or '-'"),
        }
        // Item: sqrt(...) | rational [* sqrt(...)]
        match lx.peek() {
            Some(Token::Sqrt) => {
                let pos = lx.position();
                let radicand = lx.sqrt_radicand()?;
                if radicand.is_negative() {
                    return err(pos, "nonnegative radicand");
                }
                terms.push((sign, radicand));
            }
            Some(Token::Int(_)) => {
                let coeff = lx.unsigned_rational()? * sign;
                if lx.peek() == Some(&Token::Star) {
                    lx.pos += 1;
                    let pos = lx.position();
                    let radicand = lx.sqrt_radicand()?;
                    if radicand.is_negative() {
                        return err(pos, "nonnegative radicand");
                    }
                    terms.push((coeff, radicand));
                } else {
                    rational = rational + coeff;
                }
            }
            _ => return err(lx.position(), "a rational or 'sqrt(...)'"),
        }
        first = false;
        if lx.at_end() {
            break;
        }
    }
    RadicalSum::new(rational, terms).map_err(|e| ParseError {
        position: 0,
        expected: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_forms() {
        assert_eq!(parse_rational("-72/25").unwrap(), r(-72, 25));
        assert_eq!(parse_rational(" 2 / 4 ").unwrap(), r(1, 2));
        assert_eq!(parse_rational("7").unwrap(), r(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn exact_real_forms() {
        let v = parse_exact_real("2+sqrt(3)").unwrap();
        assert_eq!(v, ExactReal::new(r(2, 1), Sign::Plus, r(3, 1)).unwrap());
        assert_eq!(parse_exact_real("sqrt(4)").unwrap(), ExactReal::int(2));
        assert_eq!(
            parse_exact_real("-sqrt(2)").unwrap(),
            ExactReal::new(r(0, 1), Sign::Minus, r(2, 1)).unwrap()
        );
        // Coefficients normalize into the radicand.
        assert_eq!(
            parse_exact_real("1+2*sqrt(2)").unwrap(),
            ExactReal::new(r(1, 1), Sign::Plus, r(8, 1)).unwrap()
        );
        assert!(parse_exact_real("sqrt(2)+sqrt(3)").is_err());
        assert!(parse_exact_real("2+sqrt(-3)").is_err());
    }

    #[test]
    fn radical_sum_forms() {
        let v = parse_radical_sum("-1*sqrt(2)+3/4").unwrap();
        assert_eq!(v.rational_part(), &r(3, 4));
        assert_eq!(v.terms().len(), 1);
        assert_eq!(v.terms()[0].coeff, r(-1, 1));
        let w = parse_radical_sum("sqrt(8)+sqrt(2)").unwrap();
        assert_eq!(w.terms()[0].coeff, r(3, 1));
        assert_eq!(w.terms()[0].radicand, r(2, 1));
    }

    #[test]
    fn error_positions() {
        let e = parse_rational("3/x").unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_radical_sum("sqrt(2)#").unwrap_err();
        assert_eq!(e.position, 7);
    }
}
