//! Canonical text form of polynomials.
//!
//! Terms print in descending graded-lex order, `^` for powers, `*` for
//! products, integer or `a/b` coefficients, e.g. `T2^2*T3 - T1^3`.
//! `parse_poly` accepts the same grammar (plus parentheses and unary
//! minus) and reports positions on errors; printing then re-parsing any
//! polynomial returns an equal value.

use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::variable::Var;
use std::fmt;

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(Scalar, Vec<(Var, u32)>)> = self.terms().collect();
        for (i, (c, mono)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else {
                let mut first = true;
                if !a.is_one() {
                    write!(f, "{}", a)?;
                    first = false;
                }
                for (v, e) in mono {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if *e == 1 {
                        write!(f, "{}", v)?;
                    } else {
                        write!(f, "{}^{}", v, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at line {}, column {}", self.msg, self.line, self.col)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> u8 {
        let b = self.src[self.pos];
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        b
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let b = self.src[self.pos];
            if b.is_ascii_whitespace() {
                self.bump();
                continue;
            }
            let (line, col) = (self.line, self.col);
            let tok = match b {
                b'+' => {
                    self.bump();
                    Tok::Plus
                }
                b'-' => {
                    self.bump();
                    Tok::Minus
                }
                b'*' => {
                    self.bump();
                    Tok::Star
                }
                b'/' => {
                    self.bump();
                    Tok::Slash
                }
                b'^' => {
                    self.bump();
                    Tok::Caret
                }
                b'(' => {
                    self.bump();
                    Tok::LParen
                }
                b')' => {
                    self.bump();
                    Tok::RParen
                }
                b'0'..=b'9' => {
                    let mut s = String::new();
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        s.push(self.bump() as char);
                    }
                    Tok::Int(s)
                }
                b if b.is_ascii_alphabetic() => {
                    let mut s = String::new();
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric())
                    {
                        s.push(self.bump() as char);
                    }
                    Tok::Ident(s)
                }
                other => return Err(self.error(format!("unexpected character {:?}", other as char))),
            };
            out.push(Spanned { tok, line, col });
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<Spanned>,
    idx: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.idx)
            .or_else(|| self.toks.last())
            .map(|s| (s.line, s.col))
            .unwrap_or((1, 1))
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError { line, col, msg: msg.into() }
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|s| s.tok.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.advance();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.advance();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Star => {
                    self.advance();
                    acc = &acc * &self.factor()?;
                }
                Tok::Slash => {
                    self.advance();
                    let rhs = self.factor()?;
                    let c = rhs
                        .as_scalar()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| self.error("division requires a nonzero constant divisor"))?;
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.advance();
            match self.advance() {
                Some(Tok::Int(s)) => {
                    let e: u32 = s.parse().map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.error("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Minus) => {
                self.advance();
                Ok(-&self.factor()?)
            }
            Some(Tok::Int(s)) => {
                self.advance();
                let n: num_bigint::BigInt =
                    s.parse().map_err(|_| self.error("bad integer literal"))?;
                Ok(MultiPoly::constant(Scalar::from_bigint(n)))
            }
            Some(Tok::Ident(name)) => {
                self.advance();
                match Var::parse(&name) {
                    Some(v) => Ok(MultiPoly::var(v)),
                    None => Err(self.error(format!("unknown variable {:?}", name))),
                }
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.expr()?;
                if self.advance() != Some(Tok::RParen) {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Parses the canonical polynomial grammar.
pub fn parse_poly(input: &str) -> Result<MultiPoly, ParseError> {
    let toks = Lexer::new(input).tokens()?;
    if toks.is_empty() {
        return Err(ParseError { line: 1, col: 1, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, idx: 0 };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}
