//! Text form: `3*x0^2*x1 - 1/2*x2 + 5`.
//!
//! Terms are joined by `+`/`-`; a term is an optional rational coefficient
//! followed by `*`-separated factors `name` or `name^k`. Whitespace is
//! ignored.

use super::{Monomial, Poly, PolyError, RingRef};
use crate::scalar::Scalar;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if pred(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<&'a str, PolyError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.error("expected an integer");
        }
        Ok(digits)
    }

    fn scalar<C: Scalar>(&self, digits: &str, at: usize) -> Result<C, PolyError> {
        digits.parse::<C>().map_err(|_| PolyError::Syntax {
            position: at,
            message: format!("invalid number {digits:?}"),
        })
    }

    fn factor<C: Scalar>(
        &mut self,
        ring: &RingRef,
        coeff: &mut C,
        exps: &mut [u32],
    ) -> Result<(), PolyError> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value: C = self.scalar(num, at)?;
                self.skip_ws();
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.integer()?;
                    let den: C = self.scalar(den, at)?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax {
                            position: at,
                            message: "zero denominator".into(),
                        });
                    }
                    value = value / den;
                }
                *coeff = coeff.clone() * value;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric());
                let index = ring.index_of(name).ok_or_else(|| PolyError::Syntax {
                    position: at,
                    message: format!("unknown variable {name}"),
                })?;
                self.skip_ws();
                let mut e = 1u32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let at = self.pos;
                    e = self.integer()?.parse().map_err(|_| PolyError::Syntax {
                        position: at,
                        message: "exponent out of range".into(),
                    })?;
                }
                exps[index] = exps[index].checked_add(e).ok_or(PolyError::ExponentOverflow)?;
            }
            Some(c) => return self.error(format!("unexpected {c:?}")),
            None => return self.error("unexpected end of input"),
        }
        Ok(())
    }
}

pub(super) fn parse_poly<C: Scalar>(text: &str, ring: &RingRef) -> Result<Poly<C>, PolyError> {
    let mut p = Parser { text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        p.skip_ws();
        let mut sign = C::one();
        match p.peek() {
            Some('+') => p.pos += 1,
            Some('-') => {
                p.pos += 1;
                sign = -sign;
            }
            None if first => return p.error("empty input"),
            None => break,
            _ if first => {}
            Some(c) => return p.error(format!("expected '+' or '-', found {c:?}")),
        }
        first = false;
        let mut coeff = sign;
        let mut exps = vec![0u32; ring.len()];
        p.factor(ring, &mut coeff, &mut exps)?;
        loop {
            p.skip_ws();
            if p.peek() == Some('*') {
                p.pos += 1;
                p.factor(ring, &mut coeff, &mut exps)?;
            } else {
                break;
            }
        }
        terms.push((Monomial::from_exponents(&exps), coeff));
    }
    Ok(Poly::from_terms(ring, terms))
}
