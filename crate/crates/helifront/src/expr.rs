//! Smooth scalar expressions of one variable `u`.
//!
//! [`Expr`] is the common representation for profile-curve components and
//! curvature data given on the command line or in curve files. An expression
//! evaluates pointwise and lifts to a [`Jet`] at any base point, so every
//! derivative used by the classifiers comes from the same tree.
//!
//! Grammar, lowest precedence first:
//!
//! ```text
//! expr   := term { ('+' | '-') term }
//! term   := factor { ('*' | '/') factor }
//! factor := base [ '^' integer ]
//! base   := '-' factor | number | 'u' | ("sqrt"|"sin"|"cos") '(' expr ')' | '(' expr ')'
//! ```

use crate::jet::{Jet, JetError};
use thiserror::Error;

/// Expression tree over the jet-liftable operation set.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Sqrt(Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
}

/// Parse failure with the byte offset where it happened.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl Expr {
    /// Parse the textual grammar above.
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }

    /// Plain evaluation at `u`.
    pub fn eval(&self, u: f64) -> f64 {
        match self {
            Expr::Num(v) => *v,
            Expr::Var => u,
            Expr::Neg(e) => -e.eval(u),
            Expr::Add(a, b) => a.eval(u) + b.eval(u),
            Expr::Sub(a, b) => a.eval(u) - b.eval(u),
            Expr::Mul(a, b) => a.eval(u) * b.eval(u),
            Expr::Div(a, b) => a.eval(u) / b.eval(u),
            Expr::Pow(e, n) => e.eval(u).powi(*n),
            Expr::Sqrt(e) => e.eval(u).sqrt(),
            Expr::Sin(e) => e.eval(u).sin(),
            Expr::Cos(e) => e.eval(u).cos(),
        }
    }

    /// Lift to a truncated Taylor expansion at `u0`.
    pub fn jet(&self, u0: f64, order: usize) -> Result<Jet, JetError> {
        if order > crate::jet::MAX_ORDER {
            return Err(JetError::OrderOutOfRange(order));
        }
        match self {
            Expr::Num(v) => Ok(Jet::constant(u0, *v, order)),
            Expr::Var => Ok(Jet::variable(u0, order)),
            Expr::Neg(e) => Ok(e.jet(u0, order)?.neg()),
            Expr::Add(a, b) => Ok(a.jet(u0, order)?.add(&b.jet(u0, order)?)),
            Expr::Sub(a, b) => Ok(a.jet(u0, order)?.sub(&b.jet(u0, order)?)),
            Expr::Mul(a, b) => Ok(a.jet(u0, order)?.mul(&b.jet(u0, order)?)),
            Expr::Div(a, b) => a.jet(u0, order)?.div(&b.jet(u0, order)?),
            Expr::Pow(e, n) => e.jet(u0, order)?.powi(*n),
            Expr::Sqrt(e) => e.jet(u0, order)?.sqrt(),
            Expr::Sin(e) => Ok(e.jet(u0, order)?.sin()),
            Expr::Cos(e) => Ok(e.jet(u0, order)?.cos()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.to_string(),
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.eat(b'^') {
            let n = self.integer()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name.as_str() {
                    "u" => Ok(Expr::Var),
                    "sqrt" | "sin" | "cos" => {
                        if !self.eat(b'(') {
                            return Err(self.error("expected '(' after function name"));
                        }
                        let arg = Box::new(self.expr()?);
                        if !self.eat(b')') {
                            return Err(self.error("expected ')'"));
                        }
                        Ok(match name.as_str() {
                            "sqrt" => Expr::Sqrt(arg),
                            "sin" => Expr::Sin(arg),
                            _ => Expr::Cos(arg),
                        })
                    }
                    _ => {
                        self.pos -= name.len();
                        Err(self.error(&format!("unknown identifier '{name}'")))
                    }
                }
            }
            _ => Err(self.error("expected a number, 'u', a function call, or '('")),
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn integer(&mut self) -> Result<i32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }

    fn number(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        if self.pos < self.src.len() && (self.src[self.pos] | 0x20) == b'e' {
            let mark = self.pos;
            self.pos += 1;
            if self.pos < self.src.len() && (self.src[self.pos] == b'+' || self.src[self.pos] == b'-')
            {
                self.pos += 1;
            }
            if self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            } else {
                self.pos = mark;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<f64>().map(Expr::Num).map_err(|_| {
            self.pos = start;
            self.error("malformed number")
        })
    }
}
