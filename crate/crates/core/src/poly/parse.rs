//! Recursive-descent reader for the polynomial text grammar:
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := factor ('*' factor)*
//! factor     := base ('^' nonneg-integer)?
//! base       := variable | rational-literal | '(' expression ')'
//! rational-literal := integer ('/' positive-integer)?
//! ```
//!
//! Whitespace is insignificant. Juxtaposition (`x_2x_3`, `2x`) is rejected.

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;

use super::{Poly, PolyError, VarTable};
use crate::arith::{Integer, Rational, Ring};

/// Extra named polynomials that may appear where a variable is allowed.
pub type Bindings<'a, R> = &'a dyn Fn(&str) -> Option<Poly<R>>;

pub fn parse_poly<R: Ring>(text: &str, vars: &VarTable, ring: R) -> Result<Poly<R>, PolyError> {
    parse_poly_with(text, vars, ring, &|_| None)
}

/// Parses `text`; identifiers not in `vars` are looked up in `bindings`.
pub fn parse_poly_with<R: Ring>(
    text: &str,
    vars: &VarTable,
    ring: R,
    bindings: Bindings<'_, R>,
) -> Result<Poly<R>, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars, ring, bindings };
    let out = p.expression()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarTable,
    ring: R,
    bindings: Bindings<'a, R>,
}

impl<R: Ring> Parser<'_, R> {
    fn err(&self, msg: String) -> PolyError {
        PolyError::Syntax { pos: self.pos, msg }
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

    fn expression(&mut self) -> Result<Poly<R>, PolyError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<R>, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.err("implicit multiplication is not allowed; use `*`".to_string()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly<R>, PolyError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a non-negative integer exponent".to_string()));
            }
            let e: u32 =
                digits.parse().map_err(|_| PolyError::Syntax { pos: start, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn integer(&mut self) -> Result<Integer, PolyError> {
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            return Err(PolyError::Syntax { pos: start, msg: "expected an integer".into() });
        }
        Ok(match d.parse::<i64>() {
            Ok(v) => Integer::from(v),
            Err(_) => Integer::from_big(BigInt::parse_bytes(d.as_bytes(), 10).unwrap()),
        })
    }

    fn base(&mut self) -> Result<Poly<R>, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`".to_string()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let num = self.integer()?;
                let mut den = Integer::ONE;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    den = self.integer()?;
                    if den.is_zero() {
                        return Err(PolyError::Syntax { pos: start, msg: "zero denominator".into() });
                    }
                }
                let q = Rational::new(num, den).expect("nonzero denominator");
                let c = self.ring.from_rational(&q).ok_or_else(|| PolyError::BadCoefficient(q.to_string()))?;
                Ok(Poly::constant(self.ring.clone(), self.vars.len(), c))
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_lowercase()
                        || self.src[self.pos].is_ascii_digit()
                        || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.vars.index_of(name) {
                    return Ok(Poly::var(self.ring.clone(), self.vars.len(), i));
                }
                if let Some(p) = (self.bindings)(name) {
                    return Ok(p);
                }
                Err(PolyError::UnknownVariable(name.to_string()))
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input".to_string())),
        }
    }
}
