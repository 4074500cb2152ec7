//! Canonical text format for polynomials.
//!
//! Grammar:
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ['*' factors] | factors
//! factors:= factor ('*' factor)*
//! factor := var ['^' uint]
//! coeff  := uint ['/' uint] | '(' cyc ')'
//! cyc    := 'z' uint ':' rat (',' rat)*          e.g. (z4:0,1) = zeta_4
//! var    := 'x' uint                              1-based indices
//! ```
//!
//! Formatting is canonical: terms in descending graded-lex order, rational
//! signs folded into the +/- separators, unit coefficients and unit exponents
//! omitted. `parse(format(p)) == p` for every nonzero `p` whose variable
//! count equals its highest used variable; the zero polynomial prints as "0",
//! which loses its variable count and scalar kind (the JSON format preserves
//! both).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::CycNumber;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::scalar::Scalar;

pub fn format_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push('x');
        out.push_str(&(i + 1).to_string());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

fn format_cyc(z: &CycNumber) -> String {
    let mut coeffs: Vec<&Rational> = z.coeffs().iter().collect();
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    let body: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    alloc::format!("(z{}:{})", z.order(), body.join(","))
}

pub fn format_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_desc().enumerate() {
        match c {
            Scalar::Rat(r) => {
                let neg = r.is_negative();
                if i == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                let mag = r.abs();
                if m.is_unit() {
                    out.push_str(&mag.to_string());
                } else {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(&format_monomial(m));
                }
            }
            Scalar::Cyc(z) => {
                if i > 0 {
                    out.push_str(" + ");
                }
                out.push_str(&format_cyc(z));
                if !m.is_unit() {
                    out.push('*');
                    out.push_str(&format_monomial(m));
                }
            }
        }
    }
    out
}

/// Parses a polynomial; the variable count is the highest index used.
pub fn parse_poly(text: &str) -> Result<MultiPoly, Error> {
    parse_poly_with_nvars(text, None)
}

/// Parses a polynomial, padding to (and validating against) an explicit
/// variable count when one is given.
pub fn parse_poly_with_nvars(text: &str, nvars: Option<usize>) -> Result<MultiPoly, Error> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let raw = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    let max_var = raw
        .iter()
        .flat_map(|t| t.factors.iter().map(|&(v, _)| v))
        .max()
        .unwrap_or(0);
    let n = match nvars {
        Some(n) => {
            if max_var > n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: max_var,
                });
            }
            n
        }
        None => max_var,
    };
    MultiPoly::from_terms(
        n,
        raw.into_iter().map(|t| {
            let mut exps = alloc::vec![0u32; n];
            for (v, e) in t.factors {
                exps[v - 1] += e;
            }
            let coeff = if t.negate { t.coeff.neg() } else { t.coeff };
            (Monomial(exps), coeff)
        }),
    )
}

struct RawTerm {
    negate: bool,
    coeff: Scalar,
    factors: Vec<(usize, u32)>, // (1-based var, exponent)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::ParseError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), Error> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected '{}'", b as char)))
        }
    }

    fn uint(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).expect("digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn uint_usize(&mut self) -> Result<usize, Error> {
        let v = self.uint()?;
        u32::try_from(&v)
            .map(|v| v as usize)
            .map_err(|_| self.error("number too large"))
    }

    fn signed_rat(&mut self) -> Result<Rational, Error> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let num = self.uint()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.uint()?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            d
        } else {
            BigInt::one()
        };
        let r = Rational::new(num, den);
        Ok(if neg { -r } else { r })
    }

    fn cyc(&mut self) -> Result<CycNumber, Error> {
        self.eat(b'(')?;
        if self.peek() != Some(b'z') {
            return Err(self.error("expected 'z' starting a cyclotomic scalar"));
        }
        self.pos += 1;
        let order = self.uint_usize()? as u32;
        if order == 0 {
            return Err(self.error("cyclotomic order must be positive"));
        }
        self.eat(b':')?;
        let mut coeffs = alloc::vec![self.signed_rat()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            coeffs.push(self.signed_rat()?);
        }
        self.eat(b')')?;
        CycNumber::from_coeffs(order, coeffs)
    }

    fn factor(&mut self) -> Result<(usize, u32), Error> {
        if self.peek() != Some(b'x') {
            return Err(self.error("expected a variable"));
        }
        self.pos += 1;
        let idx = self.uint_usize()?;
        if idx == 0 {
            return Err(self.error("variable indices start at 1"));
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.uint_usize()? as u32
        } else {
            1
        };
        Ok((idx, exp))
    }

    fn term(&mut self) -> Result<RawTerm, Error> {
        let mut factors = Vec::new();
        let coeff;
        match self.peek() {
            Some(b'(') => coeff = Scalar::Cyc(self.cyc()?),
            Some(c) if c.is_ascii_digit() => coeff = Scalar::Rat(self.signed_rat()?),
            Some(b'x') => {
                coeff = Scalar::from_int(1);
                factors.push(self.factor()?);
            }
            _ => return Err(self.error("expected a term")),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(RawTerm {
            negate: false,
            coeff,
            factors,
        })
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>, Error> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            t.negate = negate;
            terms.push(t);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(terms)
    }
}
