//! Text grammar for polynomials.
//!
//! A polynomial is a signed sum of terms `c`, `c x^k`, `x^k` or `c x`, where
//! `c` is `int` or `int/int`. Whitespace is ignored, `*` between coefficient
//! and `x` is optional, and both `-` and `−` (U+2212) are accepted as minus.
//! Repeated powers are summed.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        Self {
            chars,
            at: 0,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn position(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(i, _)| i)
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.position(),
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.at == start {
            return None;
        }
        let s: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            _ if first => false,
            Some(c) => return Err(cur.error(format!("expected '+' or '-', found {c:?}"))),
            None => unreachable!(),
        };
        first = false;

        let coeff = match cur.digits() {
            Some(num) => {
                if cur.peek() == Some('/') {
                    cur.bump();
                    let den_at = cur.position();
                    let den = cur
                        .digits()
                        .ok_or_else(|| cur.error("expected denominator digits after '/'"))?;
                    if den.is_zero() {
                        return Err(Error::Parse {
                            position: den_at,
                            message: "zero denominator".into(),
                        });
                    }
                    Some(Rational::new(num, den))
                } else {
                    Some(Rational::from_integer(num))
                }
            }
            None => None,
        };
        if coeff.is_some() && cur.peek() == Some('*') {
            cur.bump();
            if cur.peek() != Some('x') {
                return Err(cur.error("expected 'x' after '*'"));
            }
        }

        let power = if cur.peek() == Some('x') {
            cur.bump();
            if cur.peek() == Some('^') {
                cur.bump();
                let e = cur
                    .digits()
                    .ok_or_else(|| cur.error("expected exponent digits after '^'"))?;
                usize::try_from(e).map_err(|_| cur.error("exponent too large"))?
            } else {
                1
            }
        } else if coeff.is_none() {
            return Err(match cur.peek() {
                Some(c) => cur.error(format!("unexpected character {c:?}")),
                None => cur.error("dangling sign at end of input"),
            });
        } else {
            0
        };

        let mut c = coeff.unwrap_or_else(Rational::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += c;
    }
    Ok(Poly::new(coeffs))
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
