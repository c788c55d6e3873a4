//! Text form for polynomials: grevlex-descending terms joined with
//! signs, `*` between factors, `^` for exponents, e.g. `3*x0^2*x1 - x2^3`.
//! `Display` prints coefficients as stored; `canonical_string` clears them
//! to primitive integers first. The parser accepts exactly this shape plus
//! arbitrary whitespace and `p/q` coefficients.

use super::{Monomial, Poly, Ring};
use crate::error::{Error, Result};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || mono.degree() == 0 {
                factors.push(crate::rational::rational_to_string(&mag));
            }
            for (v, &e) in self.ring.var_names().iter().zip(mono.exponents()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Poly {
    /// Primitive integer coefficients with positive grevlex leading
    /// coefficient, terms grevlex-descending. This is the serialization
    /// used in certificates: two proportional polynomials print
    /// identically.
    pub fn canonical_string(&self) -> String {
        self.normalized().to_string()
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Num(BigInt),
    Ident(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            c if c.is_ascii_digit() => {
                let mut num = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        num.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(num.parse().expect("digits")));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_num(&mut self, what: &str) -> Result<BigInt> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n.clone()),
            other => Err(Error::Parse(format!("expected {what}, found {other:?}"))),
        }
    }

    /// number | ident(^uint)? — multiplied into the running term.
    fn factor(&mut self, coeff: &mut Rational, exps: &mut [u32]) -> Result<()> {
        match self.next() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.next();
                    let d = self.expect_num("denominator")?;
                    if d.is_zero() {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    *coeff *= Rational::new(n, d);
                } else {
                    *coeff *= Rational::from_integer(n);
                }
                Ok(())
            }
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{name}'")))?;
                let e: u32 = if matches!(self.peek(), Some(Tok::Caret)) {
                    self.next();
                    let n = self.expect_num("exponent")?;
                    u32::try_from(&n)
                        .map_err(|_| Error::Parse(format!("exponent {n} out of range")))?
                } else {
                    1
                };
                exps[i] = exps[i]
                    .checked_add(e)
                    .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
                Ok(())
            }
            other => Err(Error::Parse(format!("expected factor, found {other:?}"))),
        }
    }

    fn term(&mut self, sign: i8, out: &mut Poly) -> Result<()> {
        let mut coeff = if sign < 0 { -Rational::one() } else { Rational::one() };
        let mut exps = vec![0u32; self.ring.num_vars()];
        self.factor(&mut coeff, &mut exps)?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.next();
            self.factor(&mut coeff, &mut exps)?;
        }
        out.add_term(Monomial::new(exps), coeff);
        Ok(())
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero(self.ring);
        let mut sign: i8 = 1;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            sign = -1;
        } else if matches!(self.peek(), Some(Tok::Plus)) {
            self.next();
        }
        self.term(sign, &mut out)?;
        while let Some(t) = self.peek() {
            sign = match t {
                Tok::Plus => 1,
                Tok::Minus => -1,
                other => return Err(Error::Parse(format!("expected + or -, found {other:?}"))),
            };
            self.next();
            self.term(sign, &mut out)?;
        }
        Ok(out)
    }
}

impl Poly {
    /// Parse the text form back into a polynomial over `ring`.
    pub fn parse(ring: &Ring, s: &str) -> Result<Poly> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Parser { toks, pos: 0, ring };
        p.poly()
    }
}
