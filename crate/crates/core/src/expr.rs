// Copyright 2026 the curvefold Authors
// SPDX-License-Identifier: Apache-2.0

//! A small expression language for closed-form angle and curvature profiles
//! in the single variable `t`, e.g. `pi*(t+10)/24` or `pi/4 + t/2`.
//!
//! Grammar (usual precedence, `^` right associative, binds tighter than unary
//! minus):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?
//! atom   := number | 't' | 'pi' | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! Functions: `sin cos tan arctan atan arcsin asin arccos acos exp log ln sqrt`.
//! Expressions evaluate on [`Jet`]s so derivatives come for free.

use std::fmt;

use crate::error::{Error, Result};
use crate::jet::Jet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Atan,
    Asin,
    Acos,
    Exp,
    Ln,
    Sqrt,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "atan" | "arctan" => Func::Atan,
            "asin" | "arcsin" => Func::Asin,
            "acos" | "arccos" => Func::Acos,
            "exp" => Func::Exp,
            "log" | "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Atan => "atan",
            Func::Asin => "asin",
            Func::Acos => "acos",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
        }
    }

    fn apply(self, x: Jet) -> Jet {
        match self {
            Func::Sin => x.sin(),
            Func::Cos => x.cos(),
            Func::Tan => x.tan(),
            Func::Atan => x.atan(),
            Func::Asin => x.asin(),
            Func::Acos => x.acos(),
            Func::Exp => x.exp(),
            Func::Ln => x.ln(),
            Func::Sqrt => x.sqrt(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Node {
    Num(f64),
    Var,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

/// A parsed expression in `t`; keeps its source text for display and for
/// serialization into scenario reports.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    source: String,
    root: Node,
}

impl Expr {
    pub fn parse(source: &str) -> Result<Expr> {
        let tokens = tokenize(source)?;
        let mut parser = Parser { tokens, pos: 0, source };
        let root = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(Expr { source: source.trim().to_string(), root })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval(&self, t: f64) -> f64 {
        eval(&self.root, Jet::constant(t)).value()
    }

    /// Evaluates on a jet, propagating derivatives.
    pub fn eval_jet(&self, t: Jet) -> Jet {
        eval(&self.root, t)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn eval(node: &Node, t: Jet) -> Jet {
    match node {
        Node::Num(v) => Jet::constant(*v),
        Node::Var => t,
        Node::Neg(a) => -eval(a, t),
        Node::Add(a, b) => eval(a, t) + eval(b, t),
        Node::Sub(a, b) => eval(a, t) - eval(b, t),
        Node::Mul(a, b) => eval(a, t) * eval(b, t),
        Node::Div(a, b) => eval(a, t) / eval(b, t),
        Node::Pow(a, b) => {
            let base = eval(a, t);
            match constant_value(b) {
                Some(p) => base.powf(p),
                None => (eval(b, t) * base.ln()).exp(),
            }
        }
        Node::Call(f, a) => f.apply(eval(a, t)),
    }
}

fn constant_value(node: &Node) -> Option<f64> {
    Some(match node {
        Node::Num(v) => *v,
        Node::Var => return None,
        Node::Neg(a) => -constant_value(a)?,
        Node::Add(a, b) => constant_value(a)? + constant_value(b)?,
        Node::Sub(a, b) => constant_value(a)? - constant_value(b)?,
        Node::Mul(a, b) => constant_value(a)? * constant_value(b)?,
        Node::Div(a, b) => constant_value(a)? / constant_value(b)?,
        Node::Pow(a, b) => constant_value(a)?.powf(constant_value(b)?),
        Node::Call(f, a) => f.apply(Jet::constant(constant_value(a)?)).value(),
    })
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

fn tokenize(source: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<(usize, char)> = source.char_indices().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '0'..='9' | '.' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                    i += 1;
                }
                // scientific notation: 1e-3, 2.5E+4
                if i < chars.len() && matches!(chars[i].1, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && matches!(chars[j].1, '+' | '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].1.is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].1.is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let end = if i < chars.len() { chars[i].0 } else { source.len() };
                let text = &source[chars[start].0..end];
                let value = text.parse::<f64>().map_err(|_| Error::Parse {
                    input: source.to_string(),
                    message: format!("bad number '{text}' at offset {at}"),
                })?;
                tokens.push((at, Token::Num(value)));
            }
            'π' => {
                tokens.push((at, Token::Ident("pi".into())));
                i += 1;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let end = if i < chars.len() { chars[i].0 } else { source.len() };
                tokens.push((at, Token::Ident(source[chars[start].0..end].to_string())));
            }
            '+' | '-' | '*' | '/' | '^' => {
                tokens.push((at, Token::Op(c)));
                i += 1;
            }
            '−' => {
                tokens.push((at, Token::Op('-')));
                i += 1;
            }
            '×' | '·' => {
                tokens.push((at, Token::Op('*')));
                i += 1;
            }
            '÷' => {
                tokens.push((at, Token::Op('/')));
                i += 1;
            }
            '(' => {
                tokens.push((at, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((at, Token::RParen));
                i += 1;
            }
            other => {
                return Err(Error::Parse {
                    input: source.to_string(),
                    message: format!("unexpected character '{other}' at offset {at}"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let at = self.tokens.get(self.pos).map_or(self.source.len(), |(at, _)| *at);
        Error::Parse { input: self.source.to_string(), message: format!("{message} at offset {at}") }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn eat_op(&mut self, ops: &[char]) -> Option<char> {
        match self.peek() {
            Some(Token::Op(c)) if ops.contains(c) => {
                let c = *c;
                self.pos += 1;
                Some(c)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(op) = self.eat_op(&['+', '-']) {
            let rhs = self.term()?;
            lhs = if op == '+' {
                Node::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        while let Some(op) = self.eat_op(&['*', '/']) {
            let rhs = self.unary()?;
            lhs = if op == '*' {
                Node::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Node::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.eat_op(&['-']).is_some() {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        if self.eat_op(&['+']).is_some() {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.eat_op(&['^']).is_some() {
            let exponent = self.unary()?;
            return Ok(Node::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        let Some(token) = self.peek().cloned() else {
            return Err(self.error("unexpected end of input"));
        };
        self.pos += 1;
        match token {
            Token::Num(v) => Ok(Node::Num(v)),
            Token::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Token::Ident(name) => match name.as_str() {
                "t" => Ok(Node::Var),
                "pi" => Ok(Node::Num(std::f64::consts::PI)),
                _ => {
                    let Some(func) = Func::from_name(&name) else {
                        self.pos -= 1;
                        return Err(self.error(&format!("unknown identifier '{name}'")));
                    };
                    if self.peek() != Some(&Token::LParen) {
                        return Err(self.error(&format!("expected '(' after {}", func.name())));
                    }
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    Ok(Node::Call(func, Box::new(arg)))
                }
            },
            Token::RParen | Token::Op(_) => {
                self.pos -= 1;
                Err(self.error("expected a value"))
            }
        }
    }

    fn expect_rparen(&mut self) -> Result<()> {
        if self.peek() == Some(&Token::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error("expected ')'"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn parses_the_preset_angle_profiles() {
        let alpha = Expr::parse("pi*(t+10)/24").unwrap();
        assert!((alpha.eval(0.5) - PI * 10.5 / 24.0).abs() < 1e-15);
        let jet = alpha.eval_jet(Jet::variable(0.5));
        assert!((jet.derivative(1) - PI / 24.0).abs() < 1e-15);

        let alpha = Expr::parse("pi/4 + t/2").unwrap();
        assert!((alpha.eval(0.2) - (PI / 4.0 + 0.1)).abs() < 1e-15);
    }

    #[test]
    fn precedence_and_unary_minus() {
        assert_eq!(Expr::parse("2+3*4").unwrap().eval(0.0), 14.0);
        assert_eq!(Expr::parse("-2^2").unwrap().eval(0.0), -4.0);
        assert_eq!(Expr::parse("2^3^2").unwrap().eval(0.0), 512.0);
        assert_eq!(Expr::parse("(1-t)*2").unwrap().eval(0.25), 1.5);
        assert_eq!(Expr::parse("1e-1 * 10").unwrap().eval(0.0), 1.0);
        assert!((Expr::parse("π × 2 ÷ 4").unwrap().eval(0.0) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn functions_and_derivatives() {
        let e = Expr::parse("sqrt(2)/(1+t^2)").unwrap();
        let j = e.eval_jet(Jet::variable(0.5));
        assert!((j.value() - 2f64.sqrt() / 1.25).abs() < 1e-15);
        // d/dt sqrt(2)/(1+t^2) = -2 sqrt(2) t / (1+t^2)^2
        assert!((j.derivative(1) + 2f64.sqrt() / 1.5625).abs() < 1e-14);
        let e = Expr::parse("arctan(t) + log(1+t^2) - exp(t) + cos(t)*sin(t)").unwrap();
        let t: f64 = 0.3;
        let expected = t.atan() + (1.0 + t * t).ln() - t.exp() + t.cos() * t.sin();
        assert!((e.eval(t) - expected).abs() < 1e-15);
    }

    #[test]
    fn reports_errors() {
        assert!(Expr::parse("2*").is_err());
        assert!(Expr::parse("foo(t)").is_err());
        assert!(Expr::parse("(t").is_err());
        assert!(Expr::parse("t $ 2").is_err());
        assert!(Expr::parse("sin t").is_err());
    }
}
