//! Text grammar shared by every value type.
//!
//! Terms are written `c*a^d*q^e` in ascending exponent order, a unit
//! coefficient is elided, exponent 1 is written bare (`q`), and zero
//! exponents are dropped. Fractions print as `(num)/(den)` and quadratic
//! values as `(even) + (odd)*v`. The parser accepts the same forms with
//! arbitrary whitespace, in any term order, and also accepts `q^1`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (BigInt, Vec<(char, i64)>)>,
{
    let mut first = true;
    for (c, vars) in terms {
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { "-" } else { "+" })?;
        }
        first = false;
        let abs = c.abs();
        let vars: Vec<_> = vars.into_iter().filter(|(_, e)| *e != 0).collect();
        let mut parts: Vec<String> = Vec::new();
        if vars.is_empty() || !abs.is_one() {
            parts.push(abs.to_string());
        }
        for (v, e) in vars {
            parts.push(if e == 1 { v.to_string() } else { format!("{v}^{e}") });
        }
        f.write_str(&parts.join("*"))?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A parsed monomial: coefficient and exponents per variable.
pub(crate) type Term = (BigInt, BTreeMap<char, i64>);

pub(crate) struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [char],
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str, vars: &'a [char]) -> Self {
        Self { src: src.as_bytes(), pos: 0, vars }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
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

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, ch: u8) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", ch as char)))
        }
    }

    pub fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(())
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn signed_small(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let n = self.integer()?;
        let n: i64 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self, term: &mut Term) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                term.0 *= n;
                Ok(())
            }
            Some(c) if self.vars.contains(&(c as char)) => {
                self.pos += 1;
                let e = if self.eat(b'^') { self.signed_small()? } else { 1 };
                *term.1.entry(c as char).or_insert(0) += e;
                Ok(())
            }
            _ => Err(self.err("expected coefficient or variable")),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut term: Term = (BigInt::one(), BTreeMap::new());
        self.factor(&mut term)?;
        while self.eat(b'*') {
            self.factor(&mut term)?;
        }
        Ok(term)
    }

    /// `['+'|'-'] term (('+'|'-') term)*`
    pub fn poly(&mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let mut t = self.term()?;
            if sign < 0 {
                t.0 = -t.0;
            }
            out.push(t);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        out.retain(|t| !t.0.is_zero());
        Ok(out)
    }

    /// `(num)/(den)`, `num/(den)`, `num/term` or a bare polynomial.
    pub fn fraction(&mut self) -> Result<(Vec<Term>, Option<Vec<Term>>)> {
        if self.eat(b'(') {
            if self.at_open() {
                let inner = self.fraction()?;
                self.expect(b')')?;
                return Ok(inner);
            }
            let num = self.poly()?;
            self.expect(b')')?;
            if self.eat(b'/') {
                self.expect(b'(')?;
                let den = self.poly()?;
                self.expect(b')')?;
                return Ok((num, Some(den)));
            }
            return Ok((num, None));
        }
        let num = self.poly()?;
        if self.eat(b'/') {
            return Ok((num, Some(self.denominator()?)));
        }
        Ok((num, None))
    }

    /// `(poly)` or a single term.
    fn denominator(&mut self) -> Result<Vec<Term>> {
        if self.eat(b'(') {
            let den = self.poly()?;
            self.expect(b')')?;
            return Ok(den);
        }
        Ok(vec![self.term()?])
    }

    /// Looks ahead for `(`; used by the `(even) + (odd)*v` form.
    pub fn at_open(&mut self) -> bool {
        self.peek() == Some(b'(')
    }

    pub fn eat_char(&mut self, ch: u8) -> bool {
        self.eat(ch)
    }
}
