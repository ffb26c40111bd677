//! Recursive-descent parser for element expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := ('+' | '-')* power (('*')? power)*
//! power   := atom ('^' integer)?
//! atom    := rational | generator | '(' expr ')'
//! generator := 'Li' '[' n1,...,nd ']' '(' i1,...,i(d+1) ')'
//!            | 'ILi' '[' nd,...,n1 ']' '(' i1,...,i(d+1) ')'
//!            | 'log' '(' i ')'
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{gen_terms, Element, Generator, Sort, Terms};
use crate::error::{Error, Result};
use crate::lincomb::Rational;

/// Syntax tree of an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Gen(Generator),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self) -> Terms {
        match self {
            Expr::Num(q) => Terms::constant(q.clone()),
            Expr::Gen(g) => gen_terms(g.clone()),
            Expr::Add(a, b) => a.eval() + b.eval(),
            Expr::Sub(a, b) => a.eval() - b.eval(),
            Expr::Mul(a, b) => a.eval().mul(&b.eval()),
            Expr::Neg(a) => -a.eval(),
            Expr::Pow(a, e) => a.eval().pow(*e),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let end = self.pos + kw.len();
        if self.src.len() >= end && &self.src[self.pos..end] == kw.as_bytes() {
            let next = self.src.get(end).copied();
            if next.is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                return false;
            }
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse { pos: at, msg: "integer too large".into() })
    }

    fn int_list(&mut self, open: u8, close: u8) -> Result<Vec<u32>> {
        self.expect(open)?;
        let mut out = vec![self.small()?];
        while self.eat(b',') {
            out.push(self.small()?);
        }
        self.expect(close)?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut negate = false;
        loop {
            if self.eat(b'-') {
                negate = !negate;
            } else if !self.eat(b'+') {
                break;
            }
        }
        let mut lhs = self.power()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                continue;
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => break,
            }
        }
        Ok(if negate { Expr::Neg(Box::new(lhs)) } else { lhs })
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.small()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') {
                    let at = self.pos;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(Error::Parse { pos: at, msg: "zero denominator".into() });
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(Expr::Num(Rational::new(num, den)))
            }
            Some(_) => self.generator().map(Expr::Gen),
        }
    }

    fn generator(&mut self) -> Result<Generator> {
        let at = self.pos;
        let wrap = |e: Error| match e {
            Error::InvalidGenerator(msg) => Error::Parse { pos: at, msg },
            other => other,
        };
        if self.keyword("ILi") {
            let w = self.int_list(b'[', b']')?;
            let idx = self.int_list(b'(', b')')?;
            let window_order: Vec<u32> = w.into_iter().rev().collect();
            Generator::inverted(idx, window_order).map_err(wrap)
        } else if self.keyword("Li") {
            let w = self.int_list(b'[', b']')?;
            let idx = self.int_list(b'(', b')')?;
            Generator::poly(idx, w).map_err(wrap)
        } else if self.keyword("log") {
            self.expect(b'(')?;
            let i = self.small()?;
            self.expect(b')')?;
            Generator::log(i).map_err(wrap)
        } else {
            self.err("expected a number, generator or '('")
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parse into an element; the sort is Hbar exactly when an inverted symbol occurs.
pub fn parse(text: &str) -> Result<Element> {
    let terms = parse_expr(text)?.eval();
    let sort = if terms.keys().any(|m| m.factors().iter().any(Generator::is_inverted)) {
        Sort::Hbar
    } else {
        Sort::H
    };
    Element::from_terms(sort, terms)
}

/// Parse into the requested sort.
pub fn parse_in(text: &str, sort: Sort) -> Result<Element> {
    Element::from_terms(sort, parse_expr(text)?.eval())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;

    #[test]
    fn single_generators() {
        assert_eq!(parse("Li[2](1,2)").unwrap(), Element::li(&[2], &[1, 2]).unwrap());
        assert_eq!(parse("Li[1](1,3)").unwrap(), Element::li(&[1], &[1, 3]).unwrap());
        let g = parse("ILi[1,3](1,2,3)").unwrap();
        assert_eq!(g.sort(), Sort::Hbar);
        assert_eq!(g, Element::ili(&[1, 3], &[1, 2, 3]).unwrap());
    }

    #[test]
    fn sums_and_powers() {
        let e = parse("log(1)^2 - 2 Li[1,1](1,2,3)").unwrap();
        let expected = Element::log(1).unwrap().pow(2)
            - Element::li(&[1, 1], &[1, 2, 3]).unwrap().scaled(&int(2));
        assert_eq!(e, expected);
        let f = parse("-(log(1) + 1/2) * log(2)").unwrap();
        let g = parse("-log(1) log(2) - 1/2 log(2)").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn errors_carry_positions() {
        match parse("Li[2](1,2) + ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 13),
            other => panic!("{:?}", other),
        }
        assert!(matches!(parse("Li[2](2,1)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("Li[0](1,2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse("Lix[1](1,2)"), Err(Error::Parse { .. })));
    }
}
