//! Arithmetic expression language for scenario generator functions.
//!
//! One variable (`x`), the four arithmetic operators, `^` for powers, and
//! the elementary/special function set the scenario registry draws on.
//! Grammar, informally:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?            // right-associative
//! atom   := number | 'x' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//! ```
//!
//! This grammar is part of the scenario-file contract: registries are data,
//! and a user-supplied file may use exactly what is defined here.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::ExprError;

/// A parsed, evaluable expression in one variable.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    root: Node,
}

impl Expr {
    /// Parses `source`; errors carry byte offsets into it.
    pub fn parse(source: &str) -> Result<Expr, ExprError> {
        let tokens = lex(source)?;
        let mut parser = Parser { tokens, pos: 0 };
        let root = parser.expr()?;
        match parser.peek() {
            None => Ok(Expr { root }),
            Some(t) => Err(ExprError::Unexpected {
                position: t.position,
                expected: "end of input",
            }),
        }
    }

    /// Evaluates at `x`. Never panics; out-of-domain input propagates as NaN
    /// or infinity in the usual IEEE way.
    pub fn eval(&self, x: f64) -> f64 {
        self.root.eval(x)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Const(f64),
    Var,
    Unary(Func, Box<Node>),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
}

impl Node {
    fn eval(&self, x: f64) -> f64 {
        match self {
            Node::Const(c) => *c,
            Node::Var => x,
            Node::Unary(f, a) => f.apply(a.eval(x)),
            Node::Neg(a) => -a.eval(x),
            Node::Add(a, b) => a.eval(x) + b.eval(x),
            Node::Sub(a, b) => a.eval(x) - b.eval(x),
            Node::Mul(a, b) => a.eval(x) * b.eval(x),
            Node::Div(a, b) => a.eval(x) / b.eval(x),
            Node::Pow(a, b) => a.eval(x).powf(b.eval(x)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Abs,
    Sqrt,
    Cbrt,
    Exp,
    Ln,
    Log2,
    Log10,
    Sin,
    Cos,
    Tan,
    Asin,
    Acos,
    Atan,
    Acot,
    Sinh,
    Cosh,
    Tanh,
    Coth,
    Asinh,
    Acosh,
    Atanh,
    Acoth,
    Erf,
    Floor,
    Sign,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "abs" => Func::Abs,
            "sqrt" => Func::Sqrt,
            "cbrt" => Func::Cbrt,
            "exp" => Func::Exp,
            "ln" | "log" => Func::Ln,
            "log2" => Func::Log2,
            "log10" => Func::Log10,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "asin" | "arcsin" => Func::Asin,
            "acos" | "arccos" => Func::Acos,
            "atan" | "arctan" => Func::Atan,
            "acot" | "arccot" => Func::Acot,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "tanh" => Func::Tanh,
            "coth" => Func::Coth,
            "asinh" | "arcsinh" => Func::Asinh,
            "acosh" | "arccosh" => Func::Acosh,
            "atanh" | "arctanh" => Func::Atanh,
            "acoth" | "arccoth" => Func::Acoth,
            "erf" => Func::Erf,
            "floor" => Func::Floor,
            "sign" => Func::Sign,
            _ => return None,
        })
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Abs => v.abs(),
            Func::Sqrt => v.sqrt(),
            Func::Cbrt => v.cbrt(),
            Func::Exp => v.exp(),
            Func::Ln => v.ln(),
            Func::Log2 => v.log2(),
            Func::Log10 => v.log10(),
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Tan => v.tan(),
            Func::Asin => v.asin(),
            Func::Acos => v.acos(),
            Func::Atan => v.atan(),
            // principal continuous branch
            Func::Acot => core::f64::consts::FRAC_PI_2 - v.atan(),
            Func::Sinh => v.sinh(),
            Func::Cosh => v.cosh(),
            Func::Tanh => v.tanh(),
            Func::Coth => v.cosh() / v.sinh(),
            Func::Asinh => v.asinh(),
            Func::Acosh => v.acosh(),
            Func::Atanh => v.atanh(),
            Func::Acoth => 0.5 * ((v + 1.0) / (v - 1.0)).ln(),
            Func::Erf => libm::erf(v),
            Func::Floor => v.floor(),
            Func::Sign => {
                if v > 0.0 {
                    1.0
                } else if v < 0.0 {
                    -1.0
                } else {
                    0.0
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Token {
    position: usize,
    kind: TokenKind,
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(source: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let position = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                let kind = match c {
                    '+' => TokenKind::Plus,
                    '-' => TokenKind::Minus,
                    '*' => TokenKind::Star,
                    '/' => TokenKind::Slash,
                    '^' => TokenKind::Caret,
                    '(' => TokenKind::Open,
                    _ => TokenKind::Close,
                };
                tokens.push(Token { position, kind });
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mark = i;
                    i += 1;
                    if i < bytes.len() && matches!(bytes[i] as char, '+' | '-') {
                        i += 1;
                    }
                    if i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    } else {
                        i = mark; // the e belongs to an identifier, not this number
                    }
                }
                let text = &source[start..i];
                let value = text.parse::<f64>().map_err(|_| ExprError::BadToken {
                    position: start,
                    found: text.to_string(),
                })?;
                tokens.push(Token {
                    position: start,
                    kind: TokenKind::Number(value),
                });
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    position: start,
                    kind: TokenKind::Ident(source[start..i].to_string()),
                });
            }
            other => {
                return Err(ExprError::BadToken {
                    position,
                    found: other.to_string(),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_position(&self) -> usize {
        self.tokens.last().map_or(0, |t| t.position + 1)
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.bump();
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
                }
                TokenKind::Minus => {
                    self.bump();
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Star => {
                    self.bump();
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                TokenKind::Slash => {
                    self.bump();
                    lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Minus)) {
            self.bump();
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            self.bump();
            let exponent = self.unary()?;
            return Ok(Node::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        let token = self.bump().ok_or(ExprError::Unexpected {
            position: self.end_position(),
            expected: "an operand",
        })?;
        match token.kind {
            TokenKind::Number(v) => Ok(Node::Const(v)),
            TokenKind::Open => {
                let inner = self.expr()?;
                self.expect_close()?;
                Ok(inner)
            }
            TokenKind::Ident(name) => match name.as_str() {
                "x" => Ok(Node::Var),
                "pi" => Ok(Node::Const(core::f64::consts::PI)),
                "e" => Ok(Node::Const(core::f64::consts::E)),
                _ => {
                    let called = matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Open));
                    match (Func::from_name(&name), called) {
                        (Some(func), true) => {
                            self.bump();
                            let arg = self.expr()?;
                            self.expect_close()?;
                            Ok(Node::Unary(func, Box::new(arg)))
                        }
                        (Some(_), false) => Err(ExprError::Unexpected {
                            position: token.position + name.len(),
                            expected: "'(' after function name",
                        }),
                        (None, true) => Err(ExprError::UnknownFunction {
                            position: token.position,
                            name,
                        }),
                        (None, false) => Err(ExprError::UnknownVariable {
                            position: token.position,
                            name,
                        }),
                    }
                }
            },
            _ => Err(ExprError::Unexpected {
                position: token.position,
                expected: "an operand",
            }),
        }
    }

    fn expect_close(&mut self) -> Result<(), ExprError> {
        match self.bump() {
            Some(Token {
                kind: TokenKind::Close,
                ..
            }) => Ok(()),
            Some(t) => Err(ExprError::Unexpected {
                position: t.position,
                expected: "')'",
            }),
            None => Err(ExprError::Unexpected {
                position: self.end_position(),
                expected: "')'",
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(src: &str, x: f64) -> f64 {
        Expr::parse(src).unwrap().eval(x)
    }

    #[test]
    fn arithmetic_and_precedence() {
        assert_eq!(eval("2*x + 1", 3.0), 7.0);
        assert_eq!(eval("1 + 2 * 3", 0.0), 7.0);
        assert_eq!(eval("(1 + 2) * 3", 0.0), 9.0);
        assert_eq!(eval("2 ^ 3 ^ 2", 0.0), 512.0); // right associative
        assert_eq!(eval("-x^2", 2.0), -4.0);
        assert_eq!(eval("2 - 3 - 4", 0.0), -5.0);
        assert_eq!(eval("x / 2 / 2", 8.0), 2.0);
    }

    #[test]
    fn functions_and_constants() {
        assert!((eval("sin(pi/2)", 0.0) - 1.0).abs() < 1e-15);
        assert!((eval("ln(e)", 0.0) - 1.0).abs() < 1e-15);
        assert!((eval("exp(-e^(-x))", 0.0) - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(eval("abs(-3.5)", 0.0), 3.5);
        assert_eq!(eval("floor(2.9)", 0.0), 2.0);
        assert_eq!(eval("sign(-0.2)", 0.0), -1.0);
        assert!((eval("erf(0)", 0.0)).abs() < 1e-15);
        assert!((eval("erf(1)", 0.0) - 0.8427007929497149).abs() < 1e-12);
    }

    #[test]
    fn inverse_hyperbolics() {
        // arccoth(x) = 0.5 ln((x+1)/(x-1))
        let v = eval("acoth(x)", 1.5);
        assert!((v - 0.5 * (2.5f64 / 0.5).ln()).abs() < 1e-15);
        // acot decreasing through pi/4 at 1
        assert!((eval("acot(1)", 0.0) - core::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!((eval("atanh(0.5)", 0.0) - 0.5f64.atanh()).abs() < 1e-15);
    }

    #[test]
    fn scientific_literals() {
        assert_eq!(eval("1e-2 + x", 0.0), 0.01);
        assert_eq!(eval("2.5E3", 0.0), 2500.0);
        // a trailing e without digits is not an exponent (and there is no
        // implicit multiplication, so this cannot parse as 2*e either)
        assert!(Expr::parse("2e").is_err());
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            Expr::parse("2 $ 3"),
            Err(ExprError::BadToken {
                position: 2,
                found: "$".into()
            })
        );
        assert!(matches!(
            Expr::parse("sin x"),
            Err(ExprError::Unexpected { .. })
        ));
        assert!(matches!(
            Expr::parse("foo(x)"),
            Err(ExprError::UnknownFunction { position: 0, .. })
        ));
        assert!(matches!(
            Expr::parse("x + y"),
            Err(ExprError::UnknownVariable { position: 4, .. })
        ));
        assert!(matches!(
            Expr::parse("(1 + 2"),
            Err(ExprError::Unexpected { expected: "')'", .. })
        ));
        assert!(matches!(
            Expr::parse("1 + "),
            Err(ExprError::Unexpected { expected: "an operand", .. })
        ));
        assert!(matches!(
            Expr::parse("1 2"),
            Err(ExprError::Unexpected { expected: "end of input", .. })
        ));
    }
}
