//! Polynomial expression grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. The same grammar is evaluated into
//! polynomials, finite-algebra elements, or anything else implementing
//! [`Evaluator`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::CommRing;

use super::monomial::MAX_EXPONENT;
use super::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Decimal literal, kept as text so reduction mod p never overflows.
    Int(String),
    Var {
        name: String,
        offset: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
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

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == b'+' {
                Expr::Add(lhs.into(), rhs.into())
            } else {
                Expr::Sub(lhs.into(), rhs.into())
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Mul(lhs.into(), rhs.into());
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(self.unary()?.into()))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return self.err("expected exponent after `^`");
            }
            let e: u64 = digits.parse().unwrap_or(u64::MAX);
            if e > MAX_EXPONENT as u64 {
                self.pos = start;
                return Err(Error::ExponentOverflow);
            }
            return Ok(Expr::Pow(base.into(), e as u32));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.digits())),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                Ok(Expr::Var {
                    name,
                    offset: start,
                })
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("trailing input");
    }
    Ok(e)
}

/// Reduce a decimal literal modulo `p`.
pub fn literal_mod(digits: &str, p: u32) -> u32 {
    digits
        .bytes()
        .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p as u64) as u32
}

/// Target of expression evaluation.
pub trait Evaluator {
    type Value: Clone;
    fn int(&mut self, residue_digits: &str) -> Result<Self::Value>;
    fn var(&mut self, name: &str) -> Result<Self::Value>;
    fn add(&mut self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&mut self, a: &Self::Value) -> Result<Self::Value>;
    fn mul(&mut self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn one(&mut self) -> Result<Self::Value>;
}

impl Expr {
    pub fn eval<E: Evaluator>(&self, ev: &mut E) -> Result<E::Value> {
        match self {
            Expr::Int(d) => ev.int(d),
            Expr::Var { name, .. } => ev.var(name),
            Expr::Add(a, b) => {
                let (a, b) = (a.eval(ev)?, b.eval(ev)?);
                ev.add(&a, &b)
            }
            Expr::Sub(a, b) => {
                let (a, b) = (a.eval(ev)?, b.eval(ev)?);
                let nb = ev.neg(&b)?;
                ev.add(&a, &nb)
            }
            Expr::Mul(a, b) => {
                let (a, b) = (a.eval(ev)?, b.eval(ev)?);
                ev.mul(&a, &b)
            }
            Expr::Neg(a) => {
                let a = a.eval(ev)?;
                ev.neg(&a)
            }
            Expr::Pow(a, e) => {
                let mut base = a.eval(ev)?;
                let mut acc = ev.one()?;
                let mut e = *e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = ev.mul(&acc, &base)?;
                    }
                    e >>= 1;
                    if e > 0 {
                        base = ev.mul(&base, &base)?;
                    }
                }
                Ok(acc)
            }
        }
    }
}

struct PolyEval<'a>(&'a Arc<PolyRing>);

impl Evaluator for PolyEval<'_> {
    type Value = Polynomial;

    fn int(&mut self, d: &str) -> Result<Polynomial> {
        Ok(Polynomial::constant(
            self.0,
            literal_mod(d, self.0.modulus()) as i64,
        ))
    }

    fn var(&mut self, name: &str) -> Result<Polynomial> {
        let i = self
            .0
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self.0, i))
    }

    fn add(&mut self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        Ok(a.add(b))
    }

    fn neg(&mut self, a: &Polynomial) -> Result<Polynomial> {
        Ok(a.neg())
    }

    fn mul(&mut self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        a.try_mul(b)
    }

    fn one(&mut self) -> Result<Polynomial> {
        Ok(Polynomial::one(self.0))
    }
}

pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    parse_expr(text)?.eval(&mut PolyEval(ring))
}

/// Evaluates expressions inside any [`CommRing`], with named elements
/// supplied by the caller.
pub struct RingEval<'a, R: CommRing> {
    pub ring: &'a R,
    pub symbols: &'a [(String, R::Elem)],
}

impl<R: CommRing> Evaluator for RingEval<'_, R> {
    type Value = R::Elem;

    fn int(&mut self, d: &str) -> Result<R::Elem> {
        Ok(self.ring.scalar(literal_mod(d, self.ring.modulus())))
    }

    fn var(&mut self, name: &str) -> Result<R::Elem> {
        self.symbols
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.clone())
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn add(&mut self, a: &R::Elem, b: &R::Elem) -> Result<R::Elem> {
        Ok(self.ring.add(a, b))
    }

    fn neg(&mut self, a: &R::Elem) -> Result<R::Elem> {
        Ok(self.ring.neg(a))
    }

    fn mul(&mut self, a: &R::Elem, b: &R::Elem) -> Result<R::Elem> {
        Ok(self.ring.mul(a, b))
    }

    fn one(&mut self) -> Result<R::Elem> {
        Ok(self.ring.one())
    }
}

pub fn parse_element<R: CommRing>(
    ring: &R,
    symbols: &[(String, R::Elem)],
    text: &str,
) -> Result<R::Elem> {
    parse_expr(text)?.eval(&mut RingEval { ring, symbols })
}

/// Split a comma-separated list of expressions at top-level commas.
pub fn split_list(text: &str) -> Vec<&str> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = text[start..].trim();
    if !last.is_empty() || !out.is_empty() {
        out.push(last);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::MonomialOrder;

    fn ring(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(p, vars.iter().copied(), MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn literals_and_zero() {
        let r = ring(2, &["x", "y"]);
        assert!(parse_poly(&r, "0").unwrap().is_zero());
        let f = parse_poly(&r, "x^2 + x*y").unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.to_string(), "x^2 + x*y");
        assert!(parse_poly(&ring(2, &["x"]), "3*x + x").unwrap().is_zero());
    }

    #[test]
    fn precedence_and_whitespace() {
        let r = ring(7, &["x", "y"]);
        let a = parse_poly(&r, " - x ^ 2 +2*( x - y )*y").unwrap();
        let b = parse_poly(&r, "6*x^2 + 2*x*y + 5*y^2").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_poly(&r, "(x+y)^2").unwrap(),
            parse_poly(&r, "x^2+2*x*y+y^2").unwrap()
        );
        assert_eq!(
            parse_poly(&r, "123456789012345678901234567891").unwrap(),
            Polynomial::constant(&r, 1)
        );
    }

    #[test]
    fn errors_carry_offsets_and_names() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(
            parse_poly(&r, "x + z"),
            Err(Error::UnknownVariable("z".into()))
        );
        match parse_poly(&r, "x + * y") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_poly(&r, "(x + y"),
            Err(Error::Parse { offset: 6, .. })
        ));
        assert!(matches!(
            parse_poly(&r, "x y"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert_eq!(parse_poly(&r, "x^40000"), Err(Error::ExponentOverflow));
        assert_eq!(parse_poly(&r, "(x^20000)^2"), Err(Error::ExponentOverflow));
    }

    #[test]
    fn list_splitting() {
        assert_eq!(split_list("x, y*(x,y), 1"), vec!["x", "y*(x,y)", "1"]);
        assert!(split_list("  ").is_empty());
    }
}
