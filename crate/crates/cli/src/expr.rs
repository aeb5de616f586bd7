//! Element expressions such as `1 + x - 1/2*x*y^2`.
//!
//! Precedence, tightest first: `^` (nonnegative integer exponent), `*`
//! (noncommutative, order kept), unary `-`, binary `+` and `-`. Scalar
//! literals are integers or `a/b`.

use frobform::{Algebra, Element};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Token::Number(chars[start..i].iter().collect())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Token::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err(ExprError::Syntax {
                position: i,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a Algebra,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Element, ExprError> {
        let mut acc = self.signed()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.signed()?;
            } else if self.eat('-') {
                acc = &acc - &self.signed()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn signed(&mut self) -> Result<Element, ExprError> {
        if self.eat('-') {
            Ok(-&self.signed()?)
        } else {
            self.product()
        }
    }

    fn product(&mut self) -> Result<Element, ExprError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = self.alg.mul(&acc, &self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Element, ExprError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                let Ok(e) = n.parse::<u64>() else {
                    return self.error("exponent too large");
                };
                self.pos += 1;
                Ok(self.alg.pow(&base, e))
            }
            _ => self.error("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Element, ExprError> {
        let start = self.offset();
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.pos += 1;
                let mut literal = n;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Token::Number(d)) => {
                            self.pos += 1;
                            literal = format!("{literal}/{d}");
                        }
                        _ => return self.error("expected a denominator"),
                    }
                }
                let c = self.alg.field().parse(&literal).map_err(|e| ExprError::Syntax {
                    position: start,
                    message: e.to_string(),
                })?;
                Ok(self.alg.scalar(&c))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .alg
                    .basis_index(&name)
                    .ok_or(ExprError::UnknownBasisName(name))?;
                Ok(self.alg.basis(i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            Some(Token::Op(c)) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of expression"),
        }
    }
}

/// Evaluates `text` in `alg`.
pub fn parse_element(text: &str, alg: &Algebra) -> Result<Element, ExprError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        alg,
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let value = p.sum()?;
    if p.pos != p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(value)
}
