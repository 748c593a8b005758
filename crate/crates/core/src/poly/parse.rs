//! Recursive-descent parser for forms in `x, y, z`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication: `2x` and `x y` are syntax errors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::homogeneous::HomogeneousPoly;
use super::monomial::Monomial;
use crate::arith::Rational;
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 512;

/// A not necessarily homogeneous polynomial, used while parsing.
type Terms = BTreeMap<Monomial, Rational>;

fn add_into(acc: &mut Terms, m: Monomial, c: Rational) {
    let e = acc.entry(m).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&m);
    }
}

fn mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            add_into(&mut out, m1.mul(m2), c1 * c2);
        }
    }
    out
}

fn constant(c: Rational) -> Terms {
    let mut t = Terms::new();
    add_into(&mut t, Monomial::ONE, c);
    t
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse as an integer"))
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                for (m, c) in self.term()? {
                    add_into(&mut acc, m, c);
                }
            } else if self.eat(b'-') {
                for (m, c) in self.term()? {
                    add_into(&mut acc, m, -c);
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let rhs = self.unary()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Terms> {
        if self.eat(b'-') {
            Ok(self.unary()?.into_iter().map(|(m, c)| (m, -c)).collect())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Terms> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let e = self.digits()?;
        let e: u32 = match u32::try_from(e) {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => return self.err(format!("exponent larger than {MAX_EXPONENT}")),
        };
        if self.peek() == Some(b'^') {
            return self.err("chained exponents need parentheses");
        }
        let mut acc = constant(Rational::one());
        for _ in 0..e {
            acc = mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Terms> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                let mut t = Terms::new();
                t.insert(Monomial::var((c - b'x') as usize), Rational::one());
                Ok(t)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                if self.eat(b'/') {
                    let den = self.digits()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    Ok(constant(Rational::new(num, den)))
                } else {
                    Ok(constant(Rational::from_integer(num)))
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a nonzero homogeneous form.
pub fn parse_poly(text: &str) -> Result<HomogeneousPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let terms = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let mut degrees = terms.keys().rev().map(Monomial::degree);
    let first = match degrees.next() {
        Some(d) => d,
        None => return Err(Error::ZeroPolynomial),
    };
    if let Some(second) = degrees.find(|d| *d != first) {
        return Err(Error::NonHomogeneous { first, second });
    }
    HomogeneousPoly::from_terms(first, terms)
}
