//! Polynomial text grammar: parse and print with exact round-trip.
//!
//! Expressions use `+ - * ^`, parentheses, integers and implicit
//! multiplication. Variables are `x`, `y` or `x1..xk`; `g` is the ring's
//! `gamma` and `a` the generator of the residue field (only when `r > 1`).
//! Lists are separated by commas or newlines; `#` starts a comment.

use std::fmt;

use thiserror::Error;

use crate::poly::MultiPoly;
use crate::ring::{Family, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    Newline,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    for (li, line) in text.split('\n').enumerate() {
        let line_no = li + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |tok, out: &mut Vec<Token>| out.push(Token { tok, line: line_no, column });
            match c {
                '#' => break,
                ' ' | '\t' | '\r' => {}
                '0'..='9' => {
                    let start = i;
                    while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                        i += 1;
                    }
                    push(Tok::Num(chars[start..=i].iter().collect()), &mut out);
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                        i += 1;
                    }
                    push(Tok::Ident(chars[start..=i].iter().collect()), &mut out);
                }
                '+' => push(Tok::Plus, &mut out),
                '-' => push(Tok::Minus, &mut out),
                '*' => push(Tok::Star, &mut out),
                '^' => push(Tok::Caret, &mut out),
                '(' => {
                    depth += 1;
                    push(Tok::LParen, &mut out);
                }
                ')' => {
                    if depth == 0 {
                        return Err(err(line_no, column, "unbalanced ')'"));
                    }
                    depth -= 1;
                    push(Tok::RParen, &mut out);
                }
                ',' => push(Tok::Comma, &mut out),
                ';' => push(Tok::Semi, &mut out),
                _ => return Err(err(line_no, column, format!("unexpected character '{c}'"))),
            }
            i += 1;
        }
        // newlines inside parentheses are plain whitespace
        if depth == 0 {
            out.push(Token { tok: Tok::Newline, line: line_no, column: chars.len() + 1 });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    dims: &'a [usize],
    toks: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.column)).unwrap_or(self.end)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t).expect("same shape");
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("same shape");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = acc.mul(&f).expect("same shape");
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.power()?;
                    acc = acc.mul(&f).expect("same shape");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(s)) => match s.parse::<u64>() {
                    Ok(e) => e,
                    Err(_) => return self.fail("exponent too large"),
                },
                _ => return self.fail("expected a non-negative integer exponent"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.fail("unexpected end of input");
        };
        match tok {
            Tok::Num(s) => {
                // the image of an integer only depends on it modulo the characteristic
                let modulus = match self.ring.family() {
                    Family::IntegerModular => self.ring.order(),
                    Family::GammaExtension => self.ring.spec().p,
                } as u128;
                let v = s.bytes().fold(0u128, |acc, b| (acc * 10 + (b - b'0') as u128) % modulus);
                self.pos += 1;
                Ok(MultiPoly::constant(self.ring, self.dims, self.ring.from_int(v as i64)))
            }
            Tok::Ident(name) => {
                let p = self.ident(&name)?;
                self.pos += 1;
                Ok(p)
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.fail("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            other => self.fail(format!("unexpected token {}", describe(&other))),
        }
    }

    fn ident(&self, name: &str) -> Result<MultiPoly, ParseError> {
        let k = self.dims.len();
        let var = match name {
            "x" => Some(0),
            "y" if k >= 2 => Some(1),
            "g" => {
                return Ok(MultiPoly::constant(self.ring, self.dims, self.ring.gamma()));
            }
            "a" => {
                if self.ring.spec().r == 1 {
                    return self.fail("'a' is only defined when the residue field is not prime");
                }
                let a = self.ring.lift(self.ring.field().generator());
                return Ok(MultiPoly::constant(self.ring, self.dims, a));
            }
            _ => name
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| (1..=k).contains(&i))
                .map(|i| i - 1),
        };
        match var {
            Some(v) => Ok(MultiPoly::variable(self.ring, self.dims, v)),
            None => self.fail(format!("unknown identifier '{name}' for {k} variable(s)")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(s) => format!("'{s}'"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::Semi => "';'".into(),
        Tok::Newline => "end of line".into(),
    }
}

fn parse_segment(ring: &Ring, dims: &[usize], toks: &[Token], end: (usize, usize)) -> Result<MultiPoly, ParseError> {
    let mut p = Parser { ring, dims, toks, pos: 0, end };
    let f = p.expr()?;
    if p.pos < toks.len() {
        return p.fail(format!("unexpected token {}", describe(&toks[p.pos].tok)));
    }
    Ok(f)
}

fn end_of(text: &str) -> (usize, usize) {
    let lines: Vec<&str> = text.split('\n').collect();
    (lines.len(), lines.last().map(|l| l.chars().count()).unwrap_or(0) + 1)
}

fn validate_dims(dims: &[usize]) -> Result<(), ParseError> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(err(1, 1, format!("invalid dims {dims:?}")));
    }
    Ok(())
}

/// Parses a single polynomial.
pub fn parse_poly(ring: &Ring, dims: &[usize], text: &str) -> Result<MultiPoly, ParseError> {
    validate_dims(dims)?;
    let toks: Vec<Token> = tokenize(text)?.into_iter().filter(|t| t.tok != Tok::Newline).collect();
    if let Some(t) = toks.iter().find(|t| matches!(t.tok, Tok::Comma | Tok::Semi)) {
        return Err(err(t.line, t.column, format!("unexpected {}", describe(&t.tok))));
    }
    if toks.is_empty() {
        let (l, c) = end_of(text);
        return Err(err(l, c, "empty polynomial"));
    }
    parse_segment(ring, dims, &toks, end_of(text))
}

/// Parses a list separated by commas or newlines; blank items are skipped.
pub fn parse_list(ring: &Ring, dims: &[usize], text: &str) -> Result<Vec<MultiPoly>, ParseError> {
    validate_dims(dims)?;
    let toks = tokenize(text)?;
    if let Some(t) = toks.iter().find(|t| t.tok == Tok::Semi) {
        return Err(err(t.line, t.column, "unexpected ';' in a generator list"));
    }
    let end = end_of(text);
    toks.split(|t| matches!(t.tok, Tok::Comma | Tok::Newline))
        .filter(|seg| !seg.is_empty())
        .map(|seg| parse_segment(ring, dims, seg, end))
        .collect()
}

/// Parses level lists, items separated by commas. Levels are separated by `;`
/// when the text has one, and by line breaks otherwise. A level written as `0`
/// is the zero ideal.
pub fn parse_levels(ring: &Ring, dims: &[usize], text: &str) -> Result<Vec<Vec<MultiPoly>>, ParseError> {
    validate_dims(dims)?;
    let mut toks = tokenize(text)?;
    let end = end_of(text);
    let levels: Vec<&[Token]> = if toks.iter().any(|t| t.tok == Tok::Semi) {
        toks.retain(|t| t.tok != Tok::Newline);
        let mut parts: Vec<&[Token]> = toks.split(|t| t.tok == Tok::Semi).collect();
        if parts.last().is_some_and(|p| p.is_empty()) {
            parts.pop();
        }
        parts
    } else {
        toks.split(|t| t.tok == Tok::Newline).filter(|seg| !seg.is_empty()).collect()
    };
    levels
        .into_iter()
        .map(|level| {
            level
                .split(|t| t.tok == Tok::Comma)
                .filter(|seg| !(seg.is_empty() && level.is_empty()))
                .map(|seg| {
                    if seg.is_empty() {
                        let (l, c) = level.first().map(|t| (t.line, t.column)).unwrap_or(end);
                        return Err(err(l, c, "empty item in level"));
                    }
                    parse_segment(ring, dims, seg, end)
                })
                .filter(|r| !matches!(r, Ok(p) if p.is_zero()))
                .collect()
        })
        .collect()
}
