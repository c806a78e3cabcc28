//! Recursive-descent reader for the text form of Laurent polynomials.
//!
//! Grammar: `expr := term (("+"|"-") term)*`, `term := unary (("*"|"/") unary)*`,
//! `unary := "-" unary | power`, `power := atom ("^" ["-"] int)?`,
//! `atom := int | u<i> | t<j> | "(" expr ")"`. Division must be exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::{Ambient, PolyError, VarId};

pub(crate) fn parse_poly(ambient: Ambient, s: &str) -> Result<LaurentPoly, PolyError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        ambient,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ambient: Ambient,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
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

    fn expr(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LaurentPoly, PolyError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                b'/' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.exact_divide(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPoly, PolyError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<LaurentPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.integer()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        let pw = base.pow(e);
        if neg {
            if pw.len() != 1 {
                return Err(self.err("negative power of a non-monomial"));
            }
            LaurentPoly::one(self.ambient).exact_divide(&pw)
        } else {
            Ok(pw)
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<LaurentPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(LaurentPoly::constant(
                    self.ambient,
                    BigRational::from_integer(v),
                ))
            }
            Some(c @ (b'u' | b't')) => {
                let at = self.pos;
                self.pos += 1;
                let idx = self.integer()?;
                let idx: usize = idx
                    .try_into()
                    .map_err(|_| self.err("variable index out of range"))?;
                let var = if c == b'u' { VarId::u(idx) } else { VarId::t(idx) };
                let pos = self.ambient.position(var).map_err(|_| PolyError::Parse {
                    pos: at,
                    msg: format!("variable {} is outside the ambient {}", var, self.ambient),
                })?;
                let mut m = Monomial::one(self.ambient.nvars());
                m.0[pos] = 1;
                Ok(LaurentPoly::monomial(self.ambient, m, BigRational::one()))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
