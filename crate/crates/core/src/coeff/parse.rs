//! Recursive-descent parser for coefficient expressions.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | '/\') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! Exponents are nonnegative integer literals. The wedge token `/\` and
//! basis-name atoms are rejected here and only come alive in the graded
//! parser built on the same machinery (see the `exterior` module).

use std::str::FromStr;

use num_bigint::BigInt;

use super::{Coeff, Rational};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum TokenKind {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Wedge,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub pos: usize,
}

pub(crate) struct Lexer;

impl Lexer {
    pub fn tokenize(src: &str) -> Result<Vec<Token>, Error> {
        let bytes = src.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            let pos = i;
            match b {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    i += 1;
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    toks.push(Token {
                        kind: TokenKind::Int(src[start..i].to_string()),
                        pos,
                    });
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let start = i;
                    while i < bytes.len()
                        && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    toks.push(Token {
                        kind: TokenKind::Ident(src[start..i].to_string()),
                        pos,
                    });
                }
                b'/' if i + 1 < bytes.len() && bytes[i + 1] == b'\\' => {
                    toks.push(Token {
                        kind: TokenKind::Wedge,
                        pos,
                    });
                    i += 2;
                }
                b'+' => {
                    toks.push(Token {
                        kind: TokenKind::Plus,
                        pos,
                    });
                    i += 1;
                }
                b'-' => {
                    toks.push(Token {
                        kind: TokenKind::Minus,
                        pos,
                    });
                    i += 1;
                }
                b'*' => {
                    toks.push(Token {
                        kind: TokenKind::Star,
                        pos,
                    });
                    i += 1;
                }
                b'/' => {
                    toks.push(Token {
                        kind: TokenKind::Slash,
                        pos,
                    });
                    i += 1;
                }
                b'^' => {
                    toks.push(Token {
                        kind: TokenKind::Caret,
                        pos,
                    });
                    i += 1;
                }
                b'(' => {
                    toks.push(Token {
                        kind: TokenKind::LParen,
                        pos,
                    });
                    i += 1;
                }
                b')' => {
                    toks.push(Token {
                        kind: TokenKind::RParen,
                        pos,
                    });
                    i += 1;
                }
                _ => {
                    return Err(Error::syntax(
                        pos,
                        format!("unexpected character `{}`", &src[pos..].chars().next().unwrap()),
                    ))
                }
            }
        }
        toks.push(Token {
            kind: TokenKind::Eof,
            pos: bytes.len(),
        });
        Ok(toks)
    }
}

/// The value domain an expression evaluates into. One implementation for
/// plain coefficients, one for graded elements.
pub(crate) trait ExprDomain {
    type Value: Clone;

    fn constant(&self, r: Rational) -> Self::Value;
    fn ident(&self, name: &str, pos: usize) -> Result<Self::Value, Error>;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn sub(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value, Error>;
    fn div(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value, Error>;
    fn pow(&self, a: Self::Value, e: u32, pos: usize) -> Result<Self::Value, Error>;

    /// `/\` — only meaningful for graded values; scalars reject it.
    fn wedge(&self, a: Self::Value, b: Self::Value, pos: usize) -> Result<Self::Value, Error> {
        let _ = (a, b);
        Err(Error::syntax(pos, "`/\\` is not allowed in scalar expressions"))
    }
}

pub(crate) struct ExprParser<'a, D: ExprDomain> {
    toks: Vec<Token>,
    i: usize,
    domain: &'a D,
}

impl<'a, D: ExprDomain> ExprParser<'a, D> {
    pub fn parse(src: &str, domain: &'a D) -> Result<D::Value, Error> {
        let toks = Lexer::tokenize(src)?;
        let mut p = ExprParser { toks, i: 0, domain };
        let v = p.expr()?;
        match p.peek().kind {
            TokenKind::Eof => Ok(v),
            _ => Err(Error::syntax(p.peek().pos, "unexpected trailing input")),
        }
    }

    fn peek(&self) -> &Token {
        &self.toks[self.i]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<D::Value, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.domain.add(acc, rhs);
                }
                TokenKind::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.domain.sub(acc, rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<D::Value, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().kind {
                TokenKind::Star => {
                    let pos = self.bump().pos;
                    let rhs = self.unary()?;
                    acc = self.domain.mul(acc, rhs, pos)?;
                }
                TokenKind::Wedge => {
                    let pos = self.bump().pos;
                    let rhs = self.unary()?;
                    acc = self.domain.wedge(acc, rhs, pos)?;
                }
                TokenKind::Slash => {
                    let pos = self.bump().pos;
                    let rhs = self.unary()?;
                    acc = self.domain.div(acc, rhs, pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<D::Value, Error> {
        if self.peek().kind == TokenKind::Minus {
            self.bump();
            let v = self.unary()?;
            return Ok(self.domain.neg(v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<D::Value, Error> {
        let base = self.atom()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        match self.bump() {
            Token {
                kind: TokenKind::Int(digits),
                pos,
            } => {
                let e: u32 = digits
                    .parse()
                    .map_err(|_| Error::syntax(pos, "exponent too large"))?;
                self.domain.pow(base, e, caret.pos)
            }
            t => Err(Error::syntax(
                t.pos,
                "exponent must be a nonnegative integer literal",
            )),
        }
    }

    fn atom(&mut self) -> Result<D::Value, Error> {
        let t = self.bump();
        match t.kind {
            TokenKind::Int(digits) => {
                let n = BigInt::from_str(&digits).expect("lexer produced digits");
                Ok(self.domain.constant(Rational::from_integer(n)))
            }
            TokenKind::Ident(name) => self.domain.ident(&name, t.pos),
            TokenKind::LParen => {
                let v = self.expr()?;
                match self.bump() {
                    Token {
                        kind: TokenKind::RParen,
                        ..
                    } => Ok(v),
                    u => Err(Error::syntax(u.pos, "expected `)`")),
                }
            }
            TokenKind::Eof => Err(Error::syntax(t.pos, "unexpected end of input")),
            _ => Err(Error::syntax(t.pos, "expected a number, name or `(`")),
        }
    }
}

/// Domain of plain scalar coefficients over the given coordinate names.
pub(crate) struct ScalarDomain<'v> {
    pub vars: &'v [String],
}

impl ExprDomain for ScalarDomain<'_> {
    type Value = Coeff;

    fn constant(&self, r: Rational) -> Coeff {
        Coeff::constant(self.vars.len(), r)
    }

    fn ident(&self, name: &str, pos: usize) -> Result<Coeff, Error> {
        match self.vars.iter().position(|v| v == name) {
            Some(idx) => Ok(Coeff::var(self.vars.len(), idx)),
            None => Err(Error::UnknownVariable {
                name: name.to_string(),
                pos,
            }),
        }
    }

    fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        &a + &b
    }

    fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        &a - &b
    }

    fn neg(&self, a: Coeff) -> Coeff {
        -&a
    }

    fn mul(&self, a: Coeff, b: Coeff, _pos: usize) -> Result<Coeff, Error> {
        Ok(&a * &b)
    }

    fn div(&self, a: Coeff, b: Coeff, _pos: usize) -> Result<Coeff, Error> {
        a.checked_div(&b)
    }

    fn pow(&self, a: Coeff, e: u32, _pos: usize) -> Result<Coeff, Error> {
        Ok(a.pow(e))
    }
}

/// Parses a scalar coefficient expression over the given coordinate names.
pub fn parse_scalar(src: &str, vars: &[String]) -> Result<Coeff, Error> {
    ExprParser::parse(src, &ScalarDomain { vars })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_polynomial() {
        let v = vars(&["x", "y"]);
        let p = parse_scalar("3/2*x^2 - y", &v).unwrap();
        assert_eq!(p.to_expr_string(&v), "3/2*x^2 - y");
        assert!(matches!(p, Coeff::Poly(_)));
    }

    #[test]
    fn parses_rational_function() {
        let v = vars(&["x", "y"]);
        let p = parse_scalar("x/(y+1)", &v).unwrap();
        match &p {
            Coeff::Ratio(r) => {
                let den = parse_scalar("y + 1", &v).unwrap().as_fraction().0;
                assert_eq!(r.den(), &den);
            }
            _ => panic!("expected rational function"),
        }
    }

    #[test]
    fn negative_exponent_is_a_syntax_error() {
        let v = vars(&["x"]);
        match parse_scalar("x^-1", &v) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable_reports_name_and_position() {
        let v = vars(&["x"]);
        match parse_scalar("x + z", &v) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "z");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown-variable error, got {other:?}"),
        }
    }

    #[test]
    fn wedge_token_is_rejected_for_scalars() {
        let v = vars(&["x"]);
        assert!(parse_scalar(r"x /\ x", &v).is_err());
    }

    #[test]
    fn unary_minus_and_parens() {
        let v = vars(&["x"]);
        let p = parse_scalar("-(x - 2)^2", &v).unwrap();
        assert_eq!(p.to_expr_string(&v), "-x^2 + 4*x - 4");
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        let v = vars(&["x", "y"]);
        assert!(parse_scalar("2x", &v).is_err());
        assert!(parse_scalar("x y", &v).is_err());
    }
}
