//! Recursive-descent parser for arithmetic expressions.
//!
//! The expression language covers `+`, `-`, `*`, `^` with non-negative
//! integer exponents, parentheses, integer literals and declared
//! identifiers. Division is restricted to rational constants inside
//! polynomial expressions; [`parse_ratfunc`] additionally admits division by
//! arbitrary non-zero subexpressions and yields a rational function.
//! Errors carry 1-based line:column positions.

use crate::error::{Error, Result};
use crate::field::Rat;
use crate::mpoly::MPoly;
use crate::ratfunc::RatFunc;
use crate::vars::VarContext;
use num_bigint::BigInt;
use num_traits::Zero;

type QPoly = MPoly<Rat>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn lex(input: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let advance = |chars: &mut std::iter::Peekable<std::str::Chars>, line: &mut usize, col: &mut usize| {
            let c = chars.next().unwrap();
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(advance(&mut chars, &mut line, &mut col));
            }
            out.push(Spanned { tok: Tok::Int(s), line: tl, col: tc });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                s.push(advance(&mut chars, &mut line, &mut col));
            }
            out.push(Spanned { tok: Tok::Ident(s), line: tl, col: tc });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(err(tl, tc, format!("unexpected character `{c}`"))),
        };
        advance(&mut chars, &mut line, &mut col);
        out.push(Spanned { tok, line: tl, col: tc });
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ctx: &'a VarContext,
    /// When false, `/` requires a constant divisor.
    allow_fractions: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn end_pos(&self) -> (usize, usize) {
        self.toks
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1))
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<Spanned> {
        match self.next() {
            Some(s) if s.tok == tok => Ok(s),
            Some(s) => Err(err(s.line, s.col, format!("expected {what}"))),
            None => {
                let (l, c) = self.end_pos();
                Err(err(l, c, format!("expected {what}, found end of input")))
            }
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            let Some(s) = self.peek().cloned() else { break };
            match s.tok {
                Tok::Star => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Tok::Slash => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if !self.allow_fractions && !rhs.is_constant() {
                        return Err(err(s.line, s.col, "division by a non-constant expression"));
                    }
                    if rhs.is_zero() {
                        return Err(err(s.line, s.col, "division by zero"));
                    }
                    acc = acc / rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if let Some(s) = self.peek() {
            if s.tok == Tok::Minus {
                self.pos += 1;
                return Ok(-self.unary()?);
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if let Some(s) = self.peek().cloned() {
            if s.tok == Tok::Caret {
                self.pos += 1;
                match self.next() {
                    Some(Spanned { tok: Tok::Int(digits), .. }) => {
                        let e: u32 = digits
                            .parse()
                            .map_err(|_| err(s.line, s.col, "exponent too large"))?;
                        return Ok(crate::mpoly::field_pow(&base, e));
                    }
                    Some(other) => {
                        return Err(err(other.line, other.col, "expected a non-negative integer exponent"))
                    }
                    None => {
                        let (l, c) = self.end_pos();
                        return Err(err(l, c, "expected a non-negative integer exponent"));
                    }
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.next() {
            Some(Spanned { tok: Tok::Int(digits), .. }) => {
                let n: BigInt = digits.parse().expect("lexed integer");
                Ok(RatFunc::constant(Rat::from_integer(n)))
            }
            Some(Spanned { tok: Tok::Ident(name), line, col }) => match self.ctx.index_of(&name) {
                Some(i) => Ok(RatFunc::var(self.ctx, i)),
                None => Err(err(line, col, format!("unknown identifier `{name}`"))),
            },
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(s) => Err(err(s.line, s.col, "expected a value")),
            None => {
                let (l, c) = self.end_pos();
                Err(err(l, c, "expected a value, found end of input"))
            }
        }
    }
}

fn parse_with(input: &str, ctx: &VarContext, allow_fractions: bool) -> Result<RatFunc> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(err(1, 1, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, ctx, allow_fractions };
    let value = p.expr()?;
    if let Some(s) = p.peek() {
        return Err(err(s.line, s.col, "unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a polynomial expression; division is restricted to non-zero
/// rational constants.
pub fn parse_poly(input: &str, ctx: &VarContext) -> Result<QPoly> {
    let r = parse_with(input, ctx, false)?;
    if !r.den().is_one() {
        return Err(Error::Internal(format!("constant division left denominator {}", r.den())));
    }
    Ok(r.num().clone())
}

/// Parses a rational-function expression; division by any non-zero
/// subexpression is allowed.
pub fn parse_ratfunc(input: &str, ctx: &VarContext) -> Result<RatFunc> {
    parse_with(input, ctx, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VarContext {
        VarContext::new(vec!["z1", "z2"]).unwrap()
    }

    #[test]
    fn parses_polynomials() {
        let c = ctx();
        assert_eq!(parse_poly("z1^2+4*z1*z2+z2^2", &c).unwrap().to_string(), "z1^2+4*z1*z2+z2^2");
        assert_eq!(parse_poly("-z1*(z2-2)", &c).unwrap().to_string(), "-z1*z2+2*z1");
        assert_eq!(parse_poly("1/2*z1", &c).unwrap().to_string(), "1/2*z1");
        assert_eq!(parse_poly("(z1+z2)^3", &c).unwrap().total_degree(), 3);
    }

    #[test]
    fn reports_positions() {
        let c = ctx();
        match parse_poly("z1 + w2", &c) {
            Err(Error::Parse { line: 1, col: 6, msg }) => assert!(msg.contains("w2")),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("z1 +\n  %", &c) {
            Err(Error::Parse { line: 2, col: 3, .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn poly_mode_rejects_non_constant_division() {
        let c = ctx();
        match parse_poly("z1/z2", &c) {
            Err(Error::Parse { col: 3, msg, .. }) => assert!(msg.contains("non-constant")),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly("z1/0", &c).is_err());
    }

    #[test]
    fn ratfunc_mode_builds_fractions() {
        let c = ctx();
        let r = parse_ratfunc("(z1^2+4*z1*z2+z2^2)/(z1^2-3*z2^2)", &c).unwrap();
        assert_eq!(r.num().to_string(), "z1^2+4*z1*z2+z2^2");
        assert_eq!(r.den().to_string(), "z1^2-3*z2^2");
    }

    #[test]
    fn exponent_errors() {
        let c = ctx();
        assert!(parse_poly("z1^z2", &c).is_err());
        assert!(parse_poly("z1^(2)", &c).is_err());
        assert!(parse_poly("z1^99999999999999999999", &c).is_err());
    }

    #[test]
    fn unary_minus_binds_below_power() {
        let c = ctx();
        assert_eq!(parse_poly("-z1^2", &c).unwrap().to_string(), "-z1^2");
    }
}
