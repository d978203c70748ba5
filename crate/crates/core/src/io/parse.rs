//! Polynomial system text format.
//!
//! One polynomial per line, `#` starts a comment. Integers, identifiers, `+ - * ^`
//! and parentheses; multiplication is explicit and `^` takes a nonnegative
//! integer literal. An optional `@vars a b c` line fixes the variable order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::poly::{Poly, PolySet, Var, VarTable};

const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

/// A parsed polynomial system.
#[derive(Debug, Clone)]
pub struct InputSystem {
    pub table: VarTable,
    /// Polynomials in input order, as written (zero and constants included).
    pub polys: Vec<Poly>,
    /// Variables named by an `@vars` directive, in the order given.
    pub declared: Option<Vec<Var>>,
}

impl InputSystem {
    /// The nonconstant members as a set.
    pub fn set(&self) -> PolySet {
        self.polys.iter().cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::End => write!(f, "end of line"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

fn lex(src: &str, line: usize) -> Result<Lexer, ParseError> {
    let chars: Vec<(usize, char)> = src.chars().enumerate().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (col, c) = chars[i];
        let col = col + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
                continue;
            }
            '+' => toks.push((Tok::Plus, col)),
            '-' | '−' => toks.push((Tok::Minus, col)),
            '*' => toks.push((Tok::Star, col)),
            '^' => toks.push((Tok::Caret, col)),
            '(' => toks.push((Tok::LParen, col)),
            ')' => toks.push((Tok::RParen, col)),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                toks.push((Tok::Int(s.parse().expect("digits")), col));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                toks.push((Tok::Ident(s), col));
                continue;
            }
            other => {
                return Err(ParseError {
                    line,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                    expected: vec!["integer".into(), "identifier".into(), "operator".into()],
                })
            }
        }
        i += 1;
    }
    toks.push((Tok::End, chars.len() + 1));
    Ok(Lexer { toks, pos: 0, line })
}

/// Syntax tree with identifiers unresolved, so variable ids can be assigned
/// once the whole system has been read.
#[derive(Debug, Clone)]
enum Expr {
    Int(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Lexer {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let (tok, col) = self.peek();
        ParseError {
            line: self.line,
            column: *col,
            message: format!("expected {}, found {}", expected.join(" or "), tok),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Precedence climbing over `+ -` (1) and `*` (2).
    fn expr(&mut self, min_prec: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let prec = match self.peek().0 {
                Tok::Plus | Tok::Minus => 1,
                Tok::Star => 2,
                _ => break,
            };
            if prec < min_prec {
                break;
            }
            let (op, _) = self.bump();
            let rhs = self.expr(prec + 1)?;
            lhs = match op {
                Tok::Plus => Expr::Add(Box::new(lhs), Box::new(rhs)),
                Tok::Minus => Expr::Sub(Box::new(lhs), Box::new(rhs)),
                _ => Expr::Mul(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().0 {
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            (Tok::Int(n), col) => {
                let e = n.to_u32().filter(|&e| e <= MAX_EXPONENT).ok_or(ParseError {
                    line: self.line,
                    column: col,
                    message: format!("exponent {n} exceeds {MAX_EXPONENT}"),
                    expected: vec!["nonnegative integer".into()],
                })?;
                self.bump();
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(self.error(&["nonnegative integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().0.clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr::Ident(s))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr(1)?;
                if self.peek().0 != Tok::RParen {
                    return Err(self.error(&["`)`", "operator"]));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.error(&["integer", "identifier", "`(`", "`-`"])),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().0 == Tok::End {
            Ok(())
        } else {
            Err(self.error(&["`+`", "`-`", "`*`", "`^`", "end of line"]))
        }
    }
}

fn parse_line(src: &str, line: usize) -> Result<Expr, ParseError> {
    let mut lx = lex(src, line)?;
    let e = lx.expr(1)?;
    lx.finish()?;
    Ok(e)
}

fn collect_idents(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Int(_) => {}
        Expr::Ident(s) => {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) => collect_idents(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            collect_idents(a, out);
            collect_idents(b, out);
        }
    }
}

fn eval(e: &Expr, table: &VarTable) -> Result<Poly, String> {
    Ok(match e {
        Expr::Int(n) => Poly::constant(n.clone()),
        Expr::Ident(s) => Poly::var(table.get(s).ok_or_else(|| format!("unknown variable `{s}`"))?),
        Expr::Neg(a) => -eval(a, table)?,
        Expr::Add(a, b) => eval(a, table)? + eval(b, table)?,
        Expr::Sub(a, b) => eval(a, table)? - eval(b, table)?,
        Expr::Mul(a, b) => eval(a, table)? * eval(b, table)?,
        Expr::Pow(a, k) => eval(a, table)?.pow(*k),
    })
}

/// Parses one polynomial over an existing symbol table.
pub fn parse_poly(src: &str, table: &VarTable) -> Result<Poly, ParseError> {
    let e = parse_line(src, 1)?;
    eval(&e, table).map_err(|message| ParseError {
        line: 1,
        column: 1,
        message,
        expected: vec!["declared variable".into()],
    })
}

/// Parses a whole system. Variable ids follow the `@vars` directive when
/// present (undeclared names are appended), otherwise natural name order.
pub fn parse_system(text: &str) -> Result<InputSystem, ParseError> {
    let mut exprs = Vec::new();
    let mut declared_names: Option<Vec<String>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("@vars") {
            if declared_names.is_some() {
                return Err(ParseError {
                    line,
                    column: 1,
                    message: "duplicate @vars directive".into(),
                    expected: vec!["polynomial".into()],
                });
            }
            let mut names = Vec::new();
            for (k, name) in rest.split_whitespace().enumerate() {
                let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok || names.contains(&name.to_string()) {
                    return Err(ParseError {
                        line,
                        column: raw.find(name).map(|c| c + 1).unwrap_or(k + 1),
                        message: format!("invalid or repeated variable name `{name}`"),
                        expected: vec!["identifier".into()],
                    });
                }
                names.push(name.to_string());
            }
            declared_names = Some(names);
            continue;
        }
        exprs.push(parse_line(body, line)?);
    }
    let mut idents = Vec::new();
    for e in &exprs {
        collect_idents(e, &mut idents);
    }
    let (table, declared) = match &declared_names {
        Some(names) => {
            let mut rest: Vec<String> = idents.into_iter().filter(|s| !names.contains(s)).collect();
            rest.sort_by(|a, b| crate::poly::natural_cmp(a, b));
            let table = VarTable::from_names(names.iter().cloned().chain(rest));
            let declared = (0..names.len() as u32).map(Var).collect();
            (table, Some(declared))
        }
        None => {
            idents.sort_by(|a, b| crate::poly::natural_cmp(a, b));
            (VarTable::from_names(idents), None)
        }
    };
    let polys = exprs
        .iter()
        .map(|e| eval(e, &table).expect("every identifier was interned"))
        .collect();
    Ok(InputSystem { table, polys, declared })
}
