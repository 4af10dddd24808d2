//! Canonical ASCII form of polynomials and a parser for it.
//!
//! Rendering lists terms ascending in graded-lex order, variables inside a
//! monomial in ring order, e.g. `-1/2*w212*E + 44*H^3`. The parser accepts
//! that form and, more generally, sums/products/powers with parentheses and
//! division by constants.

use std::fmt;

use num_bigint::BigInt;

use crate::error::SymError;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;
use crate::ring::Ring;

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

/// Canonical text of a polynomial.
pub fn render(p: &Polynomial) -> String {
    p.to_string()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, SymError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i]
                    .parse()
                    .map_err(|_| SymError::Parse(format!("bad number at {start}")))?;
                out.push((start, Tok::Num(n)));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            other => return Err(SymError::Parse(format!("unexpected `{other}` at {start}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(usize::MAX)
    }

    fn err(&self, what: &str) -> SymError {
        if self.pos >= self.toks.len() {
            SymError::Parse(format!("{what} at end of input"))
        } else {
            SymError::Parse(format!("{what} at offset {}", self.offset()))
        }
    }

    fn expr(&mut self) -> Result<Polynomial, SymError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, SymError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.unary()?;
                    if !d.is_constant() {
                        return Err(SymError::Parse(format!(
                            "division by a non-constant at offset {at}"
                        )));
                    }
                    let c = d.constant_term();
                    let inv = c.recip()?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, SymError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, SymError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, SymError> {
        match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, Rational::integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.ring.var(&name)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.err("expected `)`")),
                }
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

/// Parse a polynomial over `ring`. Accepts the canonical rendering and
/// ordinary infix expressions.
pub fn parse(ring: &Ring, text: &str) -> Result<Polynomial, SymError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(SymError::Parse("empty input".into()));
    }
    let mut p = Parser { ring, toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(&["H", "beta", "a", "w212", "E"]).unwrap()
    }

    #[test]
    fn renders_in_canonical_order() {
        let r = ring();
        let p = parse(&r, "44*H^3 - E*w212/2").unwrap();
        assert_eq!(p.to_string(), "-1/2*w212*E + 44*H^3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(parse(&r, "-3").unwrap().to_string(), "-3");
        assert_eq!(parse(&r, "beta - H").unwrap().to_string(), "beta - H");
    }

    #[test]
    fn parses_general_expressions() {
        let r = ring();
        let p = parse(&r, "(H + beta)*(H - beta)").unwrap();
        assert_eq!(p, parse(&r, "H^2 - beta^2").unwrap());
        let q = parse(&r, "-(2*beta - 4*H)^2/4").unwrap();
        assert_eq!(q.to_string(), "-beta^2 + 4*H*beta - 4*H^2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = ring();
        assert!(matches!(
            parse(&r, "H + z"),
            Err(SymError::UnknownVariable(_))
        ));
        let e = parse(&r, "H / beta").unwrap_err().to_string();
        assert!(e.contains("offset 4"), "{e}");
        assert!(parse(&r, "H +").is_err());
        assert!(parse(&r, "(H").is_err());
        assert!(parse(&r, "H^beta").is_err());
        assert!(parse(&r, "H # 2").is_err());
        assert!(parse(&r, "").is_err());
    }
}
