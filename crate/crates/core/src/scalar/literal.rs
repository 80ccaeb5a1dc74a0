//! Tokenizer and term parser shared by the scalar literal forms.
//!
//! A literal is a signed sum of terms `c`, `c*u`, `u`, `c*u^n` where `c` is an
//! integer or a fraction `p/q` and `u` is one of the ring's unit symbols.

use std::fmt::Write;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Term {
    pub coef: BigRational,
    pub unit: Option<char>,
    pub exp: u32,
}

fn err(src: &str, why: &str) -> Error {
    Error::Parse(format!("bad literal `{src}`: {why}"))
}

struct Cursor<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
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

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn done(&self) -> bool {
        self.pos >= self.chars.len()
    }
}

/// Parses a signed sum of terms. Units not listed in `units` are rejected;
/// exponents are only accepted when `allow_exp` is set.
pub(crate) fn parse_terms(src: &str, units: &[char], allow_exp: bool) -> Result<Vec<Term>> {
    let mut cur = Cursor::new(src);
    if cur.done() {
        return Err(err(src, "empty"));
    }
    let mut terms = Vec::new();
    let mut first = true;
    while !cur.done() {
        let negative = cur.eat('-');
        if !negative && !cur.eat('+') && !first {
            return Err(err(cur.src, "expected `+` or `-`"));
        }
        first = false;

        let mut coef: Option<BigRational> = None;
        if let Some(num) = cur.digits() {
            let num: BigInt = num.parse().map_err(|_| err(cur.src, "bad integer"))?;
            let mut value = BigRational::from_integer(num);
            if cur.eat('/') {
                let den = cur.digits().ok_or_else(|| err(cur.src, "missing denominator"))?;
                let den: BigInt = den.parse().map_err(|_| err(cur.src, "bad integer"))?;
                if den.is_zero() {
                    return Err(err(cur.src, "zero denominator"));
                }
                value = BigRational::new(value.to_integer(), den);
            }
            coef = Some(value);
        }

        let had_coef = coef.is_some();
        let star = cur.eat('*');
        if star && !had_coef {
            return Err(err(cur.src, "`*` without a coefficient"));
        }
        let mut unit = None;
        let mut exp = 0;
        match cur.peek() {
            Some(c) if units.contains(&c.to_ascii_lowercase()) => {
                cur.pos += 1;
                unit = Some(c.to_ascii_lowercase());
                exp = 1;
                if cur.eat('^') {
                    if !allow_exp {
                        return Err(err(cur.src, "exponent not allowed here"));
                    }
                    let e = cur.digits().ok_or_else(|| err(cur.src, "missing exponent"))?;
                    exp = e.parse().map_err(|_| err(cur.src, "exponent too large"))?;
                }
            }
            Some(c) if c.is_alphabetic() => {
                return Err(err(cur.src, &format!("unknown symbol `{c}`")));
            }
            _ => {
                if star || !had_coef {
                    return Err(err(cur.src, "expected a term"));
                }
            }
        }

        let mut coef = coef.unwrap_or_else(BigRational::one);
        if negative {
            coef = -coef;
        }
        terms.push(Term { coef, unit, exp });
    }
    Ok(terms)
}

/// Writes one term of a sum in the canonical emitted form. `first` controls
/// whether a leading `+` is needed.
pub(crate) fn write_term(out: &mut String, coef: &BigRational, unit: Option<&str>, first: bool) {
    if coef.is_negative() {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let abs = coef.abs();
    match unit {
        None => {
            let _ = write!(out, "{abs}");
        }
        Some(u) if abs.is_one() => out.push_str(u),
        Some(u) => {
            let _ = write!(out, "{abs}*{u}");
        }
    }
}
