//! Linear comparisons over parameter names, e.g. `gamma_t <= i0 + 1` or
//! `gamma + 1 <= 2*ir`.
//!
//! ```text
//! claim := sum cmp sum
//! sum   := term (("+" | "-") term)*
//! term  := INT | INT "*" NAME | NAME
//! cmp   := "<=" | "<" | "=" | "==" | ">=" | ">" | "!="
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::solvers::{Param, ParameterReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Order,
    Size,
    Diameter,
    Param(Param),
}

impl Quantity {
    fn parse(name: &str) -> Option<Quantity> {
        match name {
            "n" => Some(Quantity::Order),
            "m" => Some(Quantity::Size),
            "diam" => Some(Quantity::Diameter),
            _ => name.parse().ok().map(Quantity::Param),
        }
    }

    /// `None` when undefined on this graph (gamma_t with an isolated vertex,
    /// diam of a disconnected graph).
    pub fn value(self, r: &ParameterReport) -> Option<i64> {
        let v = match self {
            Quantity::Order => Some(r.n),
            Quantity::Size => Some(r.m),
            Quantity::Diameter => r.diam,
            Quantity::Param(p) => r.value(p),
        };
        v.map(|x| x as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct LinearExpr {
    constant: i64,
    terms: Vec<(i64, Quantity)>,
}

impl LinearExpr {
    fn eval(&self, r: &ParameterReport) -> Option<i64> {
        self.terms
            .iter()
            .try_fold(self.constant, |acc, &(c, q)| Some(acc + c * q.value(r)?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cmp {
    Le,
    Lt,
    Eq,
    Ge,
    Gt,
    Ne,
}

impl Cmp {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            Cmp::Le => a <= b,
            Cmp::Lt => a < b,
            Cmp::Eq => a == b,
            Cmp::Ge => a >= b,
            Cmp::Gt => a > b,
            Cmp::Ne => a != b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    text: String,
    lhs: LinearExpr,
    cmp: Cmp,
    rhs: LinearExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(i64),
    Name(String),
    Plus,
    Minus,
    Star,
    Cmp(Cmp),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let two = s.get(i..i + 2);
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '<' | '>' | '=' | '!' => {
                let (cmp, len) = match (two, c) {
                    (Some("<="), _) => (Cmp::Le, 2),
                    (Some(">="), _) => (Cmp::Ge, 2),
                    (Some("=="), _) => (Cmp::Eq, 2),
                    (Some("!="), _) => (Cmp::Ne, 2),
                    (_, '<') => (Cmp::Lt, 1),
                    (_, '>') => (Cmp::Gt, 1),
                    (_, '=') => (Cmp::Eq, 1),
                    _ => return Err(Error::ClaimParse(format!("stray `!` at {i}"))),
                };
                out.push(Token::Cmp(cmp));
                i += len;
            }
            _ if c.is_ascii_digit() => {
                let end = s[i..].find(|ch: char| !ch.is_ascii_digit()).map_or(s.len(), |e| i + e);
                let v = s[i..end]
                    .parse()
                    .map_err(|_| Error::ClaimParse(format!("integer `{}` too large", &s[i..end])))?;
                out.push(Token::Int(v));
                i = end;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let end = s[i..]
                    .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                    .map_or(s.len(), |e| i + e);
                out.push(Token::Name(s[i..end].to_string()));
                i = end;
            }
            _ => return Err(Error::ClaimParse(format!("unexpected `{c}` at {i}"))),
        }
    }
    Ok(out)
}

fn parse_sum(tokens: &[Token]) -> Result<LinearExpr> {
    if tokens.is_empty() {
        return Err(Error::ClaimParse("missing side of comparison".into()));
    }
    let mut expr = LinearExpr { constant: 0, terms: Vec::new() };
    let mut sign = 1;
    let mut i = 0;
    let mut expect_term = true;
    while i < tokens.len() {
        match (&tokens[i], expect_term) {
            (Token::Plus, false) => {
                sign = 1;
                expect_term = true;
                i += 1;
            }
            (Token::Minus, false) => {
                sign = -1;
                expect_term = true;
                i += 1;
            }
            (Token::Int(k), true) => {
                if let (Some(Token::Star), Some(Token::Name(name))) = (tokens.get(i + 1), tokens.get(i + 2)) {
                    expr.terms.push((sign * k, quantity(name)?));
                    i += 3;
                } else {
                    expr.constant += sign * k;
                    i += 1;
                }
                expect_term = false;
            }
            (Token::Name(name), true) => {
                expr.terms.push((sign, quantity(name)?));
                expect_term = false;
                i += 1;
            }
            (t, _) => return Err(Error::ClaimParse(format!("unexpected token {t:?}"))),
        }
    }
    if expect_term {
        return Err(Error::ClaimParse("expression ends with an operator".into()));
    }
    Ok(expr)
}

fn quantity(name: &str) -> Result<Quantity> {
    Quantity::parse(name).ok_or_else(|| Error::ClaimParse(format!("unknown parameter `{name}`")))
}

impl Claim {
    pub fn parse(text: &str) -> Result<Claim> {
        let tokens = tokenize(text)?;
        let cmps: Vec<usize> = tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, Token::Cmp(_)))
            .map(|(i, _)| i)
            .collect();
        let [at] = cmps[..] else {
            return Err(Error::ClaimParse(format!(
                "expected exactly one comparison, found {}",
                cmps.len()
            )));
        };
        let Token::Cmp(cmp) = tokens[at] else { unreachable!() };
        Ok(Claim {
            text: text.trim().to_string(),
            lhs: parse_sum(&tokens[..at])?,
            cmp,
            rhs: parse_sum(&tokens[at + 1..])?,
        })
    }

    /// `None` when a referenced quantity is undefined on this graph.
    pub fn evaluate(&self, r: &ParameterReport) -> Option<bool> {
        Some(self.cmp.holds(self.lhs.eval(r)?, self.rhs.eval(r)?))
    }

    pub fn text(&self) -> &str {
        &self.text
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}
