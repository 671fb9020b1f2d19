//! Text grammar shared by Laurent polynomials and Puiseux series.
//!
//! ```text
//! expr := term (("+" | "-") term)* [("+" | "-") "O(" t-power ")"]
//! term := [coeff]["t"["^" exponent]]
//! ```
//! Coefficients are rationals such as `-3/2`; exponents are integers or
//! rationals, optionally parenthesised. Terms print in increasing exponent.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Default)]
pub(crate) struct Parsed {
    pub terms: Vec<(Rational, Rational)>,
    pub trunc: Option<Rational>,
}

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn unsigned_rational(&mut self) -> Result<Option<Rational>> {
        let Some(n) = self.digits() else { return Ok(None) };
        if self.peek() == Some(b'/') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let d = self.digits().expect("digit checked");
            if d.is_zero() {
                return self.err("zero denominator");
            }
            return Ok(Some(Rational::new(n, d)));
        }
        Ok(Some(Rational::from_integer(n)))
    }

    fn exponent(&mut self) -> Result<Rational> {
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let Some(q) = self.unsigned_rational()? else {
            return self.err("expected exponent");
        };
        if paren && !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -q } else { q })
    }

    /// `t` with optional exponent, already past the `t`.
    fn t_power(&mut self) -> Result<Rational> {
        if self.eat(b'^') {
            self.exponent()
        } else {
            Ok(Rational::one())
        }
    }
}

pub(crate) fn parse(text: &str) -> Result<Parsed> {
    let mut sc = Scanner { s: text.as_bytes(), pos: 0 };
    let mut out = Parsed::default();
    sc.ws();
    if sc.peek().is_none() {
        return sc.err("empty expression");
    }
    let mut first = true;
    loop {
        sc.ws();
        let neg = if sc.eat(b'-') {
            true
        } else if sc.eat(b'+') || first {
            false
        } else if sc.peek().is_none() {
            break;
        } else {
            return sc.err("expected '+' or '-'");
        };
        first = false;
        sc.ws();
        if out.trunc.is_some() {
            return sc.err("terms after O(...)");
        }
        if sc.s[sc.pos..].starts_with(b"O(") {
            sc.pos += 2;
            sc.ws();
            let q = if sc.eat(b'1') {
                Rational::zero()
            } else if sc.eat(b't') {
                sc.t_power()?
            } else {
                return sc.err("expected t inside O(...)");
            };
            sc.ws();
            if !sc.eat(b')') {
                return sc.err("expected ')'");
            }
            out.trunc = Some(q);
            continue;
        }
        let coeff = sc.unsigned_rational()?;
        sc.ws();
        if coeff.is_some() {
            sc.eat(b'*');
            sc.ws();
        }
        let exp = if sc.eat(b't') {
            sc.t_power()?
        } else if coeff.is_none() {
            return sc.err("expected a coefficient or t");
        } else {
            Rational::zero()
        };
        let c = coeff.unwrap_or_else(Rational::one);
        out.terms.push((exp, if neg { -c } else { c }));
    }
    Ok(out)
}

fn write_exp(out: &mut String, q: &Rational) {
    if !q.is_one() {
        let _ = write!(out, "^{q}");
    }
}

/// Renders terms (sorted by increasing exponent) and an optional truncation.
pub(crate) fn render<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Rational, &'a Rational)>,
    trunc: Option<&Rational>,
) -> fmt::Result {
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if e.is_zero() {
            let _ = write!(out, "{a}");
        } else {
            if !a.is_one() {
                let _ = write!(out, "{a}");
            }
            out.push('t');
            write_exp(&mut out, &e);
        }
    }
    if let Some(q) = trunc {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if q.is_zero() {
            out.push_str("O(1)");
        } else {
            out.push_str("O(t");
            write_exp(&mut out, q);
            out.push(')');
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    f.write_str(&out)
}

/// Serde through the canonical text form.
macro_rules! text_serde {
    ($ty:ty) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}
pub(crate) use text_serde;
