//! Expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := identifier | integer | '(' expr ')'
//! ```
//!
//! Division is only accepted by a nonzero constant, so canonical output with
//! rational coefficients reads back unchanged.

use num_bigint::BigInt;

use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::scalar::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
            continue;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digit run")),
                line: l0,
                column: c0,
            });
            continue;
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => return Err(err(l0, c0, format!("unexpected character `{c}`"))),
            }
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
        i += 1;
        col += 1;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    names: &'a [String],
    field: Field,
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let at = self.bump();
                    let d = self.unary()?;
                    let c = d.constant_term();
                    if d.len() > 1 || (d.len() == 1 && !d.terms()[0].0.is_one()) {
                        return Err(err(at.line, at.column, "division only by a constant"));
                    }
                    let inv = c
                        .inv()
                        .ok_or_else(|| err(at.line, at.column, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
                    let t = self.peek();
                    return Err(err(
                        t.line,
                        t.column,
                        "implicit multiplication is not allowed; write `*`",
                    ));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(k) => {
                let k: u32 = k
                    .try_into()
                    .ok()
                    .filter(|&k: &u32| k <= u16::MAX as u32)
                    .ok_or_else(|| err(t.line, t.column, "exponent too large"))?;
                if self.peek().tok == Tok::Caret {
                    let c = self.peek();
                    return Err(err(c.line, c.column, "chained exponents need parentheses"));
                }
                Ok(base.pow(k))
            }
            Tok::Minus => match self.peek().tok.clone() {
                Tok::Int(k) => Err(Error::NegativeExponent(-i64::try_from(k).unwrap_or(i64::MAX))),
                _ => Err(err(t.line, t.column, "expected an integer exponent")),
            },
            _ => Err(err(t.line, t.column, "expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => match self.names.iter().position(|n| *n == name) {
                Some(i) => Ok(Polynomial::var(self.nvars(), self.field, self.order, i)),
                None => Err(err(t.line, t.column, format!("unknown variable `{name}`"))),
            },
            Tok::Int(v) => Ok(Polynomial::constant(
                self.nvars(),
                self.field,
                self.order,
                self.field.from_bigint(&v),
            )),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(err(close.line, close.column, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(err(t.line, t.column, "unexpected end of expression")),
            other => Err(err(t.line, t.column, format!("unexpected token {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(v) => format!("`{v}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses `src` over the variables `names`. Error positions are relative to `src`.
pub fn parse_polynomial(
    src: &str,
    names: &[String],
    field: Field,
    order: MonomialOrder,
) -> Result<Polynomial> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        names,
        field,
        order,
    };
    let f = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(err(t.line, t.column, format!("unexpected token {}", describe(&t.tok))));
    }
    Ok(f)
}

pub fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic())
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
