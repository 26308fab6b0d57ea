//! Text input for symbols: `th1*th2 + 1/2 hbar`, `zeta1*eta1`, `Theta`, `(p1 + q1)^2`.
//!
//! Juxtaposition and `*` both mean the supercommutative product of symbols.

use num_traits::{One, Zero};

use super::context::{AlgebraContext, OddRole, Var};
use super::superpoly::SuperPolynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push(Token::Num(s.parse().map_err(|_| Error::Parse(s.clone()))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a AlgebraContext,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SuperPolynomial> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SuperPolynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                let c = constant_value(&d)
                    .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                if c.is_zero() {
                    return Err(Error::Parse("division by zero".into()));
                }
                acc = acc.scale(&(Rational::one() / c));
            } else if matches!(self.peek(), Some(Token::Num(_) | Token::Ident(_)))
                || self.peek() == Some(&Token::Op('('))
            {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<SuperPolynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected an integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SuperPolynomial> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(SuperPolynomial::constant(self.ctx, Rational::from_integer(v)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                ident(self.ctx, &name)
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn constant_value(f: &SuperPolynomial) -> Option<Rational> {
    match f.len() {
        0 => Some(Rational::zero()),
        1 => {
            let (m, c) = f.terms().next()?;
            (m.is_even_free() && m.odd == 0 && m.hbar == 0).then(|| c.clone())
        }
        _ => None,
    }
}

fn split_index(name: &str) -> Option<(&str, usize)> {
    let pos = name.find(|c: char| c.is_ascii_digit())?;
    let idx = name[pos..].parse().ok()?;
    Some((&name[..pos], idx))
}

fn ident(ctx: &AlgebraContext, name: &str) -> Result<SuperPolynomial> {
    match name {
        "hbar" => return Ok(SuperPolynomial::hbar(ctx)),
        "Theta" => return Ok(SuperPolynomial::orientation(ctx)),
        "upsilon" | "ups" => {
            let k = ctx.odd_index(OddRole::Upsilon)?;
            return Ok(SuperPolynomial::theta(ctx, k));
        }
        _ => {}
    }
    let unknown = || Error::UnknownVariable(name.to_string());
    let (stem, idx) = split_index(name).ok_or_else(unknown)?;
    match stem {
        "p" => SuperPolynomial::var(ctx, Var::P(idx)),
        "q" => SuperPolynomial::var(ctx, Var::Q(idx)),
        "th" | "theta" => SuperPolynomial::var(ctx, Var::Theta(idx)),
        "zeta" => Ok(SuperPolynomial::theta(ctx, ctx.zeta(idx)?)),
        "eta" => Ok(SuperPolynomial::theta(ctx, ctx.eta(idx)?)),
        "xi" => Ok(SuperPolynomial::theta(ctx, ctx.xi(idx)?)),
        "mu" => Ok(SuperPolynomial::theta(ctx, ctx.mu(idx)?)),
        _ => Err(unknown()),
    }
}

/// Parse a symbol in the given context.
pub fn parse_superpoly(ctx: &AlgebraContext, src: &str) -> Result<SuperPolynomial> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        ctx,
        tokens,
        pos: 0,
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.tokens[p.pos]
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let ctx = AlgebraContext::new(2, 1, 2).unwrap();
        for src in [
            "th1*th2 + 1/2 hbar",
            "-3/4 p1^2*q2*th3 + hbar^2",
            "p1*q1 - th1*th2*th3",
            "0",
        ] {
            let f = parse_superpoly(&ctx, src).unwrap();
            let g = parse_superpoly(&ctx, &f.to_text()).unwrap();
            assert_eq!(f, g, "{src}");
        }
    }

    #[test]
    fn named_generators() {
        let ctx = AlgebraContext::new(0, 1, 2).unwrap();
        let a = parse_superpoly(&ctx, "eta1 zeta1").unwrap();
        assert_eq!(a.to_text(), "-th1*th2");
        let t = parse_superpoly(&ctx, "Theta").unwrap();
        assert_eq!(t.to_text(), "th1*th2*th3");
        assert_eq!(parse_superpoly(&ctx, "upsilon").unwrap().to_text(), "th3");
    }

    #[test]
    fn errors() {
        let ctx = AlgebraContext::new(1, 0, 0).unwrap();
        assert!(matches!(
            parse_superpoly(&ctx, "th1"),
            Err(Error::UnknownVariable(_))
        ));
        assert!(parse_superpoly(&ctx, "p1 +").is_err());
        assert!(parse_superpoly(&ctx, "p1/q1").is_err());
    }
}
