//! Exact scalar literals.
//!
//! Grammar (whitespace ignored, no decimal literals):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor | '/' integer)*
//! factor := integer | 'i' | 'zeta' N ['^' ['-'] k] | '(' expr ')'
//! ```
//!
//! so `-1`, `3/4`, `zeta3`, `zeta12^5`, `i/2`, `2+zeta3` and `-(1+2*zeta3)` all
//! parse to exact values.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{CycNum, Rational};
use crate::error::{Error, Result};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(Error::Parse(format!("'{s}' is not an exact rational")));
    }
    let parsed = if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad numerator in '{s}'")))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| Error::Parse(format!("bad denominator in '{s}'")))?;
        if q == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        Rational::new(p, q)
    } else {
        Rational::from_integer(
            BigInt::from_str(t).map_err(|_| Error::Parse(format!("'{s}' is not an exact rational")))?,
        )
    };
    Ok(parsed)
}

pub fn parse_scalar(s: &str) -> Result<CycNum> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut p = Parser { chars, pos: 0, src: s };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in '{}'", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<CycNum> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_add(&-self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CycNum> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.checked_mul(&self.factor()?)?;
            } else if self.eat('/') {
                let d = self.integer()?;
                if d == BigInt::from(0) {
                    return Err(Error::DivisionByZero);
                }
                acc = acc.scale(&Rational::new(BigInt::from(1), d));
            } else if matches!(self.peek(), Some('i') | Some('z') | Some('(')) {
                // implicit multiplication, e.g. `2i` or `3zeta5`
                acc = acc.checked_mul(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        if self.peek() == Some('.') {
            return Err(self.error("decimal literals are not exact"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(BigInt::from_str(&digits).expect("digits parse"))
    }

    fn factor(&mut self) -> Result<CycNum> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(CycNum::from_rational(Rational::from_integer(self.integer()?))),
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some('i') => {
                self.pos += 1;
                Ok(CycNum::i())
            }
            Some('z') => {
                let word: String = self.chars[self.pos..].iter().take(4).collect();
                if word != "zeta" {
                    return Err(self.error("expected 'zeta'"));
                }
                self.pos += 4;
                let n = self.integer()?;
                let n: u64 = n.try_into().map_err(|_| self.error("conductor too large"))?;
                let mut k: i64 = 1;
                if self.eat('^') {
                    let neg = self.eat('-');
                    let e = self.integer()?;
                    let e: i64 = e.try_into().map_err(|_| self.error("exponent too large"))?;
                    k = if neg { -e } else { e };
                }
                CycNum::root_of_unity(n, k)
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}
