//! Reader for polynomial strings such as `-1/2*(x-1)^2 + q`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' factor) | ('/' number) | factor)*
//! factor := atom ['^' integer]
//! atom   := number | variable | '(' expr ')'
//! ```
//!
//! Numbers are integer literals; rationals arise through `/`. Division is
//! only allowed by a nonzero numeric literal.

use std::str::FromStr;

use super::{MultiPoly, Scalar, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            d if d.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Num(chars[start..=i].iter().collect()));
            }
            v => {
                let var = Var::from_name(&v.to_string())
                    .ok_or_else(|| Error::parse(format!("unexpected character {v:?} in {src:?}")))?;
                out.push(Token::Var(var));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn expr<S: Scalar>(&mut self) -> Result<MultiPoly<S>> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term::<S>()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc += self.term::<S>()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc -= self.term::<S>()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<MultiPoly<S>> {
        let mut acc = self.factor::<S>()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.factor::<S>()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = match self.bump() {
                        Some(Token::Num(n)) => {
                            S::parse_literal(n).ok_or_else(|| Error::parse(format!("bad number {n}")))?
                        }
                        other => {
                            return Err(Error::parse(format!(
                                "division is only supported by integer literals, found {other:?}"
                            )))
                        }
                    };
                    if d.is_zero() {
                        return Err(Error::parse("division by zero"));
                    }
                    acc = acc.scale(&(S::one() / d));
                }
                // implicit multiplication, e.g. `2q` or `(x-1)(x+1)`
                Some(Token::Num(_)) | Some(Token::Var(_)) | Some(Token::LParen) => {
                    acc = acc * self.factor::<S>()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<S: Scalar>(&mut self) -> Result<MultiPoly<S>> {
        let base = self.atom::<S>()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.bump() {
                Some(Token::Num(n)) => {
                    let k: u32 = n.parse().map_err(|_| Error::parse(format!("bad exponent {n}")))?;
                    Ok(base.pow(k))
                }
                other => Err(Error::parse(format!("expected exponent, found {other:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom<S: Scalar>(&mut self) -> Result<MultiPoly<S>> {
        match self.bump().cloned() {
            Some(Token::Num(n)) => {
                let c = S::parse_literal(&n).ok_or_else(|| Error::parse(format!("bad number {n}")))?;
                Ok(MultiPoly::constant(c))
            }
            Some(Token::Var(v)) => Ok(MultiPoly::var(v)),
            Some(Token::LParen) => {
                let inner = self.expr::<S>()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(Error::parse(format!("expected ')', found {other:?}"))),
                }
            }
            Some(Token::Minus) => Ok(-self.factor::<S>()?),
            other => Err(Error::parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_poly<S: Scalar>(src: &str) -> Result<MultiPoly<S>> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut p = Parser { tokens: &tokens, pos: 0 };
    let out = p.expr::<S>()?;
    if p.pos != tokens.len() {
        return Err(Error::parse(format!("trailing input in {src:?}")));
    }
    Ok(out)
}

impl<S: Scalar> FromStr for MultiPoly<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};

    #[test]
    fn parses_rendered_output() {
        for s in ["q + q^2", "1 + 4*x + x^2", "1/2 - 1/2*x", "-q", "0", "q*x - 3/7*y^2*z"] {
            let p: Poly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn parses_products_and_powers() {
        let p: Poly = "-1/2*(x-1)".parse().unwrap();
        assert_eq!(p.to_string(), "1/2 - 1/2*x");
        let p: Poly = "(x-1)^2/2".parse().unwrap();
        assert_eq!(p.to_string(), "1/2 - x + 1/2*x^2");
        let p: Poly = "2q(1+q)".parse().unwrap();
        assert_eq!(p, "2*q + 2*q^2".parse().unwrap());
        let p: Poly = "-(q)".parse().unwrap();
        assert_eq!(p.constant_term(), Rational::from_int(0));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<Poly>().is_err());
        assert!("w + 1".parse::<Poly>().is_err());
        assert!("(x".parse::<Poly>().is_err());
        assert!("x/y".parse::<Poly>().is_err());
        assert!("x/0".parse::<Poly>().is_err());
        assert!("x )".parse::<Poly>().is_err());
    }
}
